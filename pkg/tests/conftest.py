import pytest

from bessel_convexity import _pykernels

try:
    from bessel_convexity import _ckernels
except ImportError:  # pragma: no cover - compiled kernels optional
    _ckernels = None

ACCEPTANCE_LINES = []


@pytest.fixture(params=["python", "compiled"])
def kern(request):
    if request.param == "compiled":
        if _ckernels is None:
            pytest.skip("compiled kernels not built")
        return _ckernels
    return _pykernels


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

"""Critical orders: the least ``nu`` for which a map is convex of order alpha in the unit disk.

Each condition is ``Q(1) = alpha`` for the map's quotient.  Multiplying out
the denominators gives division-free equations in ``J_nu(1)`` and
``J_{nu+1}(1)``, which are what the bisection works on::

    F:   nu (nu^2 - 1) J^2 + (1 - nu) J'^2 - alpha nu J J'      = 0
    G:   (2 nu + alpha - 2) J_{nu+1} - alpha J_nu                = 0
    H:   (2 nu + 2 alpha - 4) J_{nu+1} - (4 alpha - 3) J_nu      = 0
    PHI: (2 nu + 2 alpha) J_{nu+1} - J_nu                        = 0

with ``J = J_nu(1)`` and ``J' = J'_nu(1) = nu J_nu(1) - J_{nu+1}(1)``.
Residuals are reported relative to the sum of the magnitudes of the terms.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass

from .bessel_core import jv
from .errors import BracketError, DomainError
from .normalized_maps import MapKind, convexity_quotient

RESIDUAL_TOL = 1e-10
CONJECTURED_THRESHOLD = -1.875
_EXTEND = (20.0, 40.0, 80.0)


def _j(nu):
    return jv(nu, 1.0), jv(nu + 1.0, 1.0)


def _jprime(nu):
    j0, j1 = _j(nu)
    return j0, nu * j0 - j1


def _terms(kind, alpha, nu):
    # signed terms whose sum is the equation; their magnitudes give the scale
    if kind is MapKind.F:
        j, jp = _jprime(nu)
        return (nu * (nu * nu - 1.0) * j * j, (1.0 - nu) * jp * jp, -alpha * nu * j * jp)
    j0, j1 = _j(nu)
    if kind is MapKind.G:
        return ((2.0 * nu + alpha - 2.0) * j1, -alpha * j0)
    if kind is MapKind.H:
        return ((2.0 * nu + 2.0 * alpha - 4.0) * j1, -(4.0 * alpha - 3.0) * j0)
    return ((2.0 * nu + 2.0 * alpha) * j1, -j0)


def _scaled(terms):
    s = math.fsum(terms)
    scale = math.fsum(abs(t) for t in terms)
    return s, (abs(s) / scale if scale > 0.0 else 0.0)


def equation_value(kind, alpha: float, nu: float) -> tuple:
    """``(value, relative_residual)`` of the critical-order equation at ``nu``."""
    return _scaled(_terms(MapKind.parse(kind), float(alpha), float(nu)))


def _bisect(fun, lo, hi, max_iter=200):
    """Bisection on a sign change of ``fun``; returns ``(root, iterations)``."""
    flo = fun(lo)
    fhi = fun(hi)
    if flo == 0.0:
        return lo, 0
    if fhi == 0.0:
        return hi, 0
    if (flo > 0.0) == (fhi > 0.0):
        raise BracketError(f"no sign change on ({lo}, {hi})")
    it = 0
    while it < max_iter:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        fm = fun(mid)
        it += 1
        if fm == 0.0:
            return mid, it
        if (fm > 0.0) == (flo > 0.0):
            lo, flo = mid, fm
        else:
            hi = mid
    # pick the endpoint with the smaller value
    return (lo if abs(flo) <= abs(fun(hi)) else hi), it


def _bisect_extending(fun, lo, hi):
    ends = (hi,) + tuple(e for e in _EXTEND if e > hi)
    last = None
    for end in ends:
        try:
            root, it = _bisect(fun, lo, end)
            return root, it, (lo, end)
        except BracketError as exc:
            last = exc
    raise BracketError(f"no root found on ({lo}, {ends[-1]}): {last}")


@dataclass(frozen=True)
class ConstantResult:
    name: str
    value: float
    residual: float
    window: tuple
    equation: str

    def as_dict(self):
        d = asdict(self)
        d["window"] = list(self.window)
        return d


def nu_star() -> ConstantResult:
    """Root of ``J'_nu(1) = 0`` in (0, 1): below it ``j'_{nu,1} < 1``."""
    fun = lambda nu: _jprime(nu)[1]  # noqa: E731
    window = (1e-9, 1.0)
    root, _ = _bisect(fun, *window)
    j0, j1 = _j(root)
    _, res = _scaled((root * j0, -j1))
    return ConstantResult("nu_star", root, res, window, "J'_nu(1) = 0")


def nu_star_phi() -> ConstantResult:
    """Root of ``J_{nu+1}(1) = 0`` in (-2, -1): the first zero of J_{nu+1} crosses 1."""
    window = (-2.0 + 1e-9, -1.0)
    root, _ = _bisect(lambda nu: jv(nu + 1.0, 1.0), *window)
    j1 = jv(root + 1.0, 1.0)
    # J_{nu+1}(1) has a simple zero; measure the residual against the size of its summands
    scale = abs(jv(root, 1.0)) + abs(jv(root + 2.0, 1.0))
    return ConstantResult("nu_star_phi", root, abs(j1) / scale, window, "J_{nu+1}(1) = 0")


def _f_quadratic_factor(nu):
    j, jp = _jprime(nu)
    return (nu * (nu + 1.0) * j * j, -jp * jp)


def nu_two() -> ConstantResult:
    """Root in (0, 1) of ``nu (nu+1) J_nu(1)^2 - J'_nu(1)^2``, the factor that is discarded at alpha = 0."""
    window = (1e-9, 1.0)
    root, _ = _bisect(lambda nu: math.fsum(_f_quadratic_factor(nu)), *window)
    _, res = _scaled(_f_quadratic_factor(root))
    return ConstantResult("nu_two", root, res, window, "nu(nu+1)J_nu(1)^2 - J'_nu(1)^2 = 0")


def special_constants() -> dict:
    """``nu_star``, ``nu_star_phi`` and ``nu_two`` keyed by name."""
    return {c.name: c for c in (nu_star(), nu_star_phi(), nu_two())}


def auxiliary_bound_function(x: float) -> float:
    """``-log 2 - log(x+1) + 1/(2(x+1)) + (3x+5)/(4(x+1)^2 (x+2)(x+3))``."""
    x = float(x)
    return (-math.log(2.0) - math.log(x + 1.0) + 1.0 / (2.0 * (x + 1.0))
            + (3.0 * x + 5.0) / (4.0 * (x + 1.0) ** 2 * (x + 2.0) * (x + 3.0)))


@dataclass(frozen=True)
class ThresholdResult:
    kind: MapKind
    alpha: float
    nu_critical: float
    equation_residual: float
    search_window: tuple
    equation: str
    iterations: int = 0

    def as_dict(self):
        d = asdict(self)
        d["kind"] = self.kind.value
        d["search_window"] = list(self.search_window)
        return d


_EQUATIONS = {
    MapKind.F: "nu(nu^2-1)J_nu(1)^2 + (1-nu)J'_nu(1)^2 - alpha*nu*J_nu(1)J'_nu(1) = 0",
    MapKind.G: "(2nu+alpha-2)J_{nu+1}(1) - alpha*J_nu(1) = 0",
    MapKind.H: "(2nu+2alpha-4)J_{nu+1}(1) - (4alpha-3)J_nu(1) = 0",
    MapKind.PHI: "(2nu+2alpha)J_{nu+1}(1) - J_nu(1) = 0",
}


def critical_order(kind, alpha: float = 0.0) -> ThresholdResult:
    """Least order ``nu`` with ``Q(1) = alpha``; the map is convex of order alpha in D iff nu >= it."""
    kind = MapKind.parse(kind)
    alpha = float(alpha)
    if not (0.0 <= alpha < 1.0):
        raise DomainError(f"alpha must lie in [0, 1), got {alpha}")
    if kind is MapKind.F:
        lo = nu_star().value + 1e-6
        if alpha == 0.0:
            # (nu - 1)(nu(nu+1)J^2 - J'^2): the quadratic factor's root lies below nu_star
            root = 1.0
            _, res = equation_value(kind, 0.0, root)
            return ThresholdResult(kind, 0.0, root, res, (lo, 10.0),
                                   "(nu-1)(nu(nu+1)J_nu(1)^2 - J'_nu(1)^2) = 0", 0)
    elif kind is MapKind.PHI:
        lo = nu_star_phi().value + 1e-6
    else:
        lo = -0.99
    fun = lambda nu: math.fsum(_terms(kind, alpha, nu))  # noqa: E731
    root, it, window = _bisect_extending(fun, lo, 10.0)
    _, res = equation_value(kind, alpha, root)
    if kind is MapKind.G and alpha == 0.0 and jv(root + 1.0, 1.0) <= 0.0:
        raise BracketError("J_{nu+1}(1) vanishes near the root; factor (2nu-2) not isolated")
    return ThresholdResult(kind, alpha, root, res, window, _EQUATIONS[kind], it)


@dataclass(frozen=True)
class ConjectureEvidence:
    nu: float
    q_at_one: float
    boundary_min: float
    argmin_angle: float
    pole: float
    verdict: str

    def as_dict(self):
        return asdict(self)


def conjecture_evidence(nu: float, n_samples: int = 720) -> ConjectureEvidence:
    """Convexity of ``phi_nu`` in the unit disk, from Q(1) and an independent boundary scan.

    Below ``nu_star_phi`` the first pole of Q sits inside the unit disk and the
    map is not convex there; the boundary fields are then ``-inf`` and ``nan``.
    """
    from .disk import boundary_min_real
    from .normalized_maps import check_window, first_pole

    nu = check_window(MapKind.PHI, nu)
    pole = first_pole(MapKind.PHI, nu)
    if pole <= 1.0:
        try:
            q1 = convexity_quotient(MapKind.PHI, nu, 1.0).real
        except ArithmeticError:
            q1 = -math.inf
        return ConjectureEvidence(nu, q1, -math.inf, math.nan, pole, "NOT_CONVEX")
    q1 = convexity_quotient(MapKind.PHI, nu, 1.0).real
    scan = boundary_min_real(MapKind.PHI, nu, 1.0, n_samples)
    verdict = "CONVEX" if q1 >= 0.0 else "NOT_CONVEX"
    return ConjectureEvidence(nu, q1, scan.min_real, scan.argmin_angle, pole, verdict)


def conjecture_disproof(nu_probe: float = -1.6) -> ConjectureEvidence:
    """Evidence at an order the ``nu >= -1.875`` conjecture calls convex but which is not.

    The probe must lie strictly between -1.875 and the true threshold.
    """
    nu_probe = float(nu_probe)
    nu0 = critical_order(MapKind.PHI, 0.0).nu_critical
    if not (CONJECTURED_THRESHOLD < nu_probe < nu0):
        raise DomainError(
            f"probe {nu_probe} must lie in ({CONJECTURED_THRESHOLD}, {nu0:.6f}) to test the conjecture"
        )
    return conjecture_evidence(nu_probe)

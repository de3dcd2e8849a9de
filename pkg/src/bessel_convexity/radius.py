"""Radii of convexity of order alpha and radii of starlikeness.

The radius of convexity of order ``alpha`` is the smallest positive root of
``Q(r) = alpha`` on the real axis.  ``Q`` starts at 1, decreases strictly and
tends to minus infinity at the first pole, so the root is unique and a plain
bisection on ``(0, pole)`` always finds it; a few Newton steps then polish it.

For H and PHI the radius is in the variable ``z`` of ``h(z)`` and ``phi(z)``
(whose Bessel argument is ``sqrt z``).
"""
from __future__ import annotations

from dataclasses import asdict, dataclass

from .errors import BracketError, ConvergenceError, DomainError
from .expansions import DEFAULT_EXPANSION, ExpansionConfig, envelope_slope, lower_envelope
from .normalized_maps import MapKind, check_window, first_pole
from .zero_finder import alpha_zero, bessel_derivative_zero

BISECT_REL_WIDTH = 1e-12
POLE_SHRINK = 1e-9
MAX_NEWTON = 5
RESIDUAL_TOL = 1e-10


@dataclass(frozen=True)
class RadiusResult:
    kind: MapKind
    nu: float
    alpha: float
    radius: float
    bracket: tuple
    residual: float
    iterations: int
    pole: float

    def as_dict(self) -> dict:
        d = asdict(self)
        d["kind"] = self.kind.value
        d["bracket"] = list(self.bracket)
        return d


def check_alpha(alpha) -> float:
    alpha = float(alpha)
    if not (0.0 <= alpha < 1.0):
        raise DomainError(f"alpha must lie in [0, 1), got {alpha}")
    return alpha


def radius_convexity(kind, nu: float, alpha: float = 0.0,
                     cfg: ExpansionConfig = DEFAULT_EXPANSION) -> RadiusResult:
    """Radius of convexity of order ``alpha`` of the selected map."""
    kind = MapKind.parse(kind)
    nu = check_window(kind, nu)
    alpha = check_alpha(alpha)
    pole = first_pole(kind, nu)

    def f(r):
        return lower_envelope(kind, nu, r, cfg) - alpha

    lo, hi = 0.0, pole * (1.0 - POLE_SHRINK)
    f_hi = f(hi)
    if f_hi >= 0.0:
        raise BracketError(f"Q - alpha does not change sign below the pole {pole} (value {f_hi})")
    it = 0
    while hi - lo > BISECT_REL_WIDTH * pole:
        mid = 0.5 * (lo + hi)
        if f(mid) > 0.0:
            lo = mid
        else:
            hi = mid
        it += 1
    bracket = (lo, hi)
    r = 0.5 * (lo + hi)
    fr = f(r)
    for _ in range(MAX_NEWTON):
        if fr == 0.0:
            break
        step = fr / envelope_slope(kind, nu, r, cfg)
        rn = r - step
        if not (lo <= rn <= hi):
            break
        fn = f(rn)
        it += 1
        if abs(fn) >= abs(fr):
            break
        r, fr = rn, fn
        if abs(step) <= 4e-16 * r:
            break
    residual = abs(fr)
    if residual > RESIDUAL_TOL:
        raise ConvergenceError(f"radius residual {residual:.3g} exceeds {RESIDUAL_TOL}")
    return RadiusResult(kind, nu, alpha, r, bracket, residual, it, pole)


def radius_starlikeness(kind, nu: float) -> float:
    """Radius of starlikeness: ``j'_{nu,1}`` for F and ``alpha_{nu,1}`` for G."""
    kind = MapKind.parse(kind)
    nu = check_window(kind, nu)
    if kind is MapKind.F:
        return bessel_derivative_zero(nu, 1)
    if kind is MapKind.G:
        return alpha_zero(nu, 1)
    raise DomainError(f"radius of starlikeness is only provided for f and g, not {kind.value}")

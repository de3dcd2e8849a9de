"""Convexity quotients ``Q(z) = 1 + z f''(z)/f'(z)`` of the normalized Bessel maps.

The maps, for order ``nu`` in the window of each kind::

    F:   f(z)   = (2^nu Gamma(nu+1) J_nu(z))^(1/nu)          nu > 0
    G:   g(z)   = 2^nu Gamma(nu+1) z^(1-nu) J_nu(z)           nu > -1
    H:   h(z)   = 2^nu Gamma(nu+1) z^(1-nu/2) J_nu(sqrt z)    nu > -1
    PHI: phi(z) = 2^nu Gamma(nu+1) z^(-nu/2) J_nu(sqrt z)     nu > -2

Each quotient is rewritten in terms of the entire functions ``A_mu`` (see
``bessel_core``) so no branch of ``z^nu`` or ``sqrt z`` is ever taken and no
derivative is computed numerically.  With ``w = z^2/4`` for F, G and
``w = z/4`` for H, PHI:

    Q_G   = 1 + 2w (2w A_{nu+2} - 3 A_{nu+1}) / (A_nu - 2w A_{nu+1})
    Q_H   = 1 + w (w A_{nu+2} - 2 A_{nu+1}) / (A_nu - w A_{nu+1})
    Q_PHI = A_nu / A_{nu+1} - nu
    Q_F   = (nu^2 - z^2) / R + (1/nu - 1) R,   R = z J'_nu/J_nu = nu - 2w A_{nu+1}/A_nu
"""
from __future__ import annotations

import cmath
import math
from enum import Enum
from functools import lru_cache

from .bessel_core import DEFAULT_SERIES, SeriesConfig, bessel_a, bessel_j, bessel_j_derivative, check_order
from .errors import DomainError, PoleProximityError
from .zero_finder import (
    ZeroFamily,
    alpha_family,
    alpha_zero,
    beta_family,
    beta_zero,
    bessel_derivative_zero,
    bessel_zero,
    j_family,
    j_prime_family,
)

DENOM_FLOOR = 1e-300


class MapKind(Enum):
    F = "f"
    G = "g"
    H = "h"
    PHI = "phi"

    @property
    def nu_floor(self) -> float:
        return {"f": 0.0, "g": -1.0, "h": -1.0, "phi": -2.0}[self.value]

    @property
    def even(self) -> bool:
        """True when Q depends on z^2 (F, G); False when it is linear in z (H, PHI)."""
        return self in (MapKind.F, MapKind.G)

    @classmethod
    def parse(cls, value) -> "MapKind":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise DomainError(f"unknown map kind {value!r}; expected one of f, g, h, phi") from None


def check_window(kind, nu) -> float:
    """Validate ``nu`` against the map's admissible window and return it."""
    kind = MapKind.parse(kind)
    return check_order(nu, kind.nu_floor)


def _den(d, what):
    if abs(d) < DENOM_FLOOR:
        raise PoleProximityError(f"{what} denominator {abs(d):.3g} below {DENOM_FLOOR}")
    return d


def convexity_quotient(kind, nu: float, z: complex, cfg: SeriesConfig = DEFAULT_SERIES) -> complex:
    """``1 + z f''(z)/f'(z)`` for the selected normalized map."""
    kind = MapKind.parse(kind)
    nu = check_window(kind, nu)
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"non-finite argument {z}")
    # the cap applies to the Bessel argument: z for F, G and sqrt(z) for H, PHI
    arg = abs(z) if kind.even else math.sqrt(abs(z))
    if arg > cfg.z_cap:
        raise DomainError(f"Bessel argument {arg} exceeds the series cap {cfg.z_cap}")
    w = 0.25 * z * z if kind.even else 0.25 * z
    a0 = bessel_a(nu, w, cfg)
    a1 = bessel_a(nu + 1.0, w, cfg)
    if kind is MapKind.PHI:
        return a0 / _den(a1, "phi") - nu
    if kind is MapKind.F:
        _den(a0, "f")
        r = nu - 2.0 * w * a1 / a0
        return (nu * nu - z * z) / _den(r, "f") + (1.0 / nu - 1.0) * r
    a2 = bessel_a(nu + 2.0, w, cfg)
    if kind is MapKind.G:
        return 1.0 + 2.0 * w * (2.0 * w * a2 - 3.0 * a1) / _den(a0 - 2.0 * w * a1, "g")
    return 1.0 + w * (w * a2 - 2.0 * a1) / _den(a0 - w * a1, "h")


def phi_quotient_identity_check(nu: float, z: complex, cfg: SeriesConfig = DEFAULT_SERIES) -> float:
    """Gap between two Bessel-ratio forms of ``Q_PHI`` at the principal ``sqrt z``.

    ``s J_nu(s) / (2 J_{nu+1}(s)) - nu`` against
    ``(s J'_{nu+1}(s) / J_{nu+1}(s) - (nu - 1)) / 2``.
    """
    nu = check_window(MapKind.PHI, nu)
    z = complex(z)
    if z == 0:
        return 0.0
    s = cmath.sqrt(z)
    j1 = _den(bessel_j(nu + 1.0, s, cfg), "phi")
    first = s * bessel_j(nu, s, cfg) / (2.0 * j1) - nu
    second = 0.5 * (s * bessel_j_derivative(nu + 1.0, s, cfg) / j1 - (nu - 1.0))
    return abs(first - second)


def pole_families(kind, nu: float) -> list[ZeroFamily]:
    """Zero families whose squares (F, G) or squares-as-poles (H, PHI) appear in Q."""
    kind = MapKind.parse(kind)
    nu = check_window(kind, nu)
    if kind is MapKind.F:
        return [j_family(nu), j_prime_family(nu)]
    if kind is MapKind.G:
        return [alpha_family(nu)]
    if kind is MapKind.H:
        return [beta_family(nu)]
    return [j_family(nu + 1.0)]


def first_pole(kind, nu: float) -> float:
    """Modulus of the singularity of Q nearest the origin.

    F: ``j'_{nu,1}``; G: ``alpha_{nu,1}``; H: ``beta_{nu,1}^2``; PHI: ``j_{nu+1,1}^2``.
    """
    kind = MapKind.parse(kind)
    return _first_pole(kind, check_window(kind, nu))


@lru_cache(maxsize=4096)
def _first_pole(kind, nu):
    if kind is MapKind.F:
        return bessel_derivative_zero(nu, 1)
    if kind is MapKind.G:
        return alpha_zero(nu, 1)
    if kind is MapKind.H:
        return beta_zero(nu, 1) ** 2
    return bessel_zero(nu + 1.0, 1) ** 2

"""Bessel functions of the first kind for real order, with an independent oracle.

``J_nu(z) = (z/2)^nu * A_nu(z^2/4)`` where ``A_nu`` is entire.  The ascending
series is summed for ``A_nu``; the fractional power uses the principal
logarithm.  For large real arguments the Hankel expansion takes over (the
series loses all digits to cancellation there).

The Poisson integral, evaluated by Gauss-Jacobi quadrature, is kept as a
fully separate route and is only used for cross-checking.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ._backend import kernels
from .errors import ConvergenceError, DomainError

ORDER_FLOOR = -2.0
HANKEL_MIN_X = 8.0
_EPS = 2.220446049250313e-16

# Lanczos approximation, g = 7, n = 9
_LANCZOS_G = 7.0
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_SQRT_2PI = math.sqrt(2.0 * math.pi)


@dataclass(frozen=True)
class SeriesConfig:
    """Truncation controls for the ascending series.

    ``z_cap`` bounds ``|z|`` on the series path; beyond it the series cannot
    be trusted in double precision.
    """

    rel_tol: float = 1e-13
    max_terms: int = 200
    z_cap: float = 100.0

    def __post_init__(self):
        if not (0.0 < self.rel_tol <= 1e-6):
            raise DomainError(f"rel_tol must be in (0, 1e-6], got {self.rel_tol}")
        if self.max_terms < 30:
            raise DomainError(f"max_terms must be >= 30, got {self.max_terms}")
        if not self.z_cap > 0.0:
            raise DomainError("z_cap must be positive")


DEFAULT_SERIES = SeriesConfig()


def check_order(nu, floor=ORDER_FLOOR, name="nu"):
    """Validate a real order ``nu > floor`` and return it as float."""
    nu = float(nu)
    if not math.isfinite(nu) or nu <= floor:
        raise DomainError(f"{name} must be a finite real > {floor}, got {nu}")
    return nu


def _is_nonpositive_integer(x):
    return x <= 0.0 and x == math.floor(x)


def _sinpi(x):
    # sin(pi x) with exact argument reduction
    n = round(x)
    r = x - n
    s = math.sin(math.pi * r)
    return -s if n % 2 else s


def _gamma_lanczos(x):
    # valid for x >= 0.5
    x -= 1.0
    a = _LANCZOS[0]
    t = x + _LANCZOS_G + 0.5
    for k in range(1, 9):
        a += _LANCZOS[k] / (x + k)
    return _SQRT_2PI * t ** (x + 0.5) * math.exp(-t) * a


def gamma_fn(x: float) -> float:
    """Euler gamma function for real ``x``.

    Lanczos approximation on [1, 2), recurrence upward for larger ``x`` and
    the reflection formula below 1/2.  Relative error stays near 1e-15 on
    (-2, 172).
    """
    x = float(x)
    if _is_nonpositive_integer(x):
        raise DomainError(f"gamma has a pole at {x}")
    if x < 0.5:
        return math.pi / (_sinpi(x) * gamma_fn(1.0 - x))
    if x > 171.7:
        return math.inf
    if x < 2.0:
        return _gamma_lanczos(x) if x >= 1.0 else _gamma_lanczos(x + 1.0) / x
    y = x
    prod = 1.0
    while y >= 2.0:
        y -= 1.0
        prod *= y
    return prod * _gamma_lanczos(y)


def rgamma(x: float) -> float:
    """``1/Gamma(x)``, zero at the poles."""
    if _is_nonpositive_integer(x):
        return 0.0
    return 1.0 / gamma_fn(x)


def bessel_a(mu: float, w: complex, cfg: SeriesConfig = DEFAULT_SERIES) -> complex:
    """Entire part ``A_mu(w) = sum (-w)^n / (n! Gamma(n+mu+1))``."""
    w = complex(w)
    if w.imag == 0.0:
        s, _, n = kernels.series_a_real(mu, w.real, rgamma(mu + 1.0), cfg.rel_tol, cfg.max_terms)
        if n < 0:
            raise ConvergenceError(f"A_{mu}({w}) did not converge in {cfg.max_terms} terms")
        return complex(s)
    sr, si, _, n = kernels.series_a(mu, w.real, w.imag, rgamma(mu + 1.0), cfg.rel_tol, cfg.max_terms)
    if n < 0:
        raise ConvergenceError(f"A_{mu}({w}) did not converge in {cfg.max_terms} terms")
    return complex(sr, si)


def _hankel_ok(nu, x):
    if x < HANKEL_MIN_X:
        return None
    value, err, _ = kernels.hankel_j(nu, x)
    if err <= max(1e-15, 0.5 * _EPS * math.exp(min(x, 700.0))):
        return value
    return None


def jv(nu: float, x: float, cfg: SeriesConfig = DEFAULT_SERIES) -> float:
    """``J_nu(x)`` for real ``x > 0`` (series or Hankel expansion)."""
    x = float(x)
    if x <= 0.0:
        raise DomainError("jv expects x > 0; use bessel_j for other arguments")
    value = _hankel_ok(nu, x)
    if value is not None:
        return value
    if x > cfg.z_cap:
        raise DomainError(f"|z|={x} exceeds the series cap {cfg.z_cap}")
    a = bessel_a(nu, 0.25 * x * x, cfg).real
    return math.exp(nu * math.log(0.5 * x)) * a


def bessel_j(nu: float, z: complex, cfg: SeriesConfig = DEFAULT_SERIES) -> complex:
    """``J_nu(z)`` with the principal branch of ``(z/2)^nu``.

    Real positive arguments beyond the Hankel threshold use the asymptotic
    expansion; everything else goes through the ascending series.
    """
    nu = check_order(nu)
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"non-finite argument {z}")
    if z.imag == 0.0 and z.real > 0.0:
        return complex(jv(nu, z.real, cfg))
    if abs(z) > cfg.z_cap:
        raise DomainError(f"|z|={abs(z)} exceeds the series cap {cfg.z_cap}")
    if z == 0:
        if nu == 0.0:
            return 1.0 + 0.0j
        if nu > 0.0 or nu == math.floor(nu):
            return 0j
        raise DomainError(f"J_{nu}(0) is singular for negative non-integer order")
    a = bessel_a(nu, 0.25 * z * z, cfg)
    if nu == math.floor(nu):
        return (0.5 * z) ** int(nu) * a
    return cmath.exp(nu * cmath.log(0.5 * z)) * a


def bessel_j_derivative(nu: float, z: complex, cfg: SeriesConfig = DEFAULT_SERIES) -> complex:
    """``J'_nu(z)`` from ``z J'_nu = nu J_nu - z J_{nu+1}``."""
    nu = check_order(nu)
    z = complex(z)
    if z == 0:
        if nu == 1.0:
            return 0.5 + 0.0j
        if nu > 1.0 or nu == 0.0:
            return 0j
        raise DomainError(f"J'_{nu}(0) is singular for order {nu} < 1")
    return nu * bessel_j(nu, z, cfg) / z - bessel_j(nu + 1.0, z, cfg)


def dini(gamma: float, nu: float, x: float, cfg: SeriesConfig = DEFAULT_SERIES) -> float:
    """Dini combination ``gamma J_nu(x) + x J'_nu(x) = (gamma+nu) J_nu(x) - x J_{nu+1}(x)``."""
    nu = check_order(nu)
    x = float(x)
    if x < 0.0:
        raise DomainError("dini expects x >= 0")
    if x == 0.0:
        return gamma * bessel_j(nu, 0.0, cfg).real
    return (gamma + nu) * jv(nu, x, cfg) - x * jv(nu + 1.0, x, cfg)


@lru_cache(maxsize=64)
def _jacobi_rule(n, a):
    from scipy.special import roots_jacobi

    t, w = roots_jacobi(n, a, a)
    return t, w


def bessel_j_poisson(nu: float, x: float, n_quad: int = 64) -> float:
    """Poisson integral oracle for ``J_nu(x)``, ``nu > -1/2``.

    ``J_nu(x) = (x/2)^nu / (sqrt(pi) Gamma(nu+1/2)) * int_{-1}^{1} (1-t^2)^(nu-1/2) cos(xt) dt``
    with the weight absorbed into an ``n_quad``-point Gauss-Jacobi rule, so the
    endpoint singularity costs nothing.  Uses the stdlib gamma, not
    :func:`gamma_fn`, to stay independent of the series route.
    """
    nu = float(nu)
    x = float(x)
    if nu <= -0.5:
        raise DomainError(f"Poisson integral needs nu > -1/2, got {nu}")
    if n_quad < 32:
        raise DomainError("n_quad must be >= 32")
    sign = 1.0
    if x < 0.0:
        if nu != math.floor(nu):
            raise DomainError("negative x needs an integer order")
        sign = -1.0 if int(nu) % 2 else 1.0
        x = -x
    if x == 0.0:
        return 1.0 if nu == 0.0 else 0.0
    t, w = _jacobi_rule(int(n_quad), nu - 0.5)
    integral = float(np.dot(w, np.cos(x * t)))
    pref = math.exp(nu * math.log(0.5 * x) - math.lgamma(nu + 0.5)) / math.sqrt(math.pi)
    return sign * pref * integral


def rayleigh_sum(nu: float, power: int) -> float:
    """Closed form of ``sum_n j_{nu,n}^(-power)`` for ``power`` in {4, 6}."""
    nu = check_order(nu, -1.0)
    if power == 4:
        return 1.0 / (16.0 * (nu + 1.0) ** 2 * (nu + 2.0))
    if power == 6:
        return 1.0 / (32.0 * (nu + 1.0) ** 3 * (nu + 2.0) * (nu + 3.0))
    raise DomainError(f"power must be 4 or 6, got {power}")

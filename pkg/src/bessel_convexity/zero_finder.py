"""Positive zeros of J_nu, J'_nu and Dini functions gamma*J_nu + x*J'_nu.

All three families are handled through one scaled form (see ``_pykernels``),
so the zeros of every family come from the same bracket-and-polish code.
Tables are built by a sign-change scan from the origin, which counts zeros
and therefore certifies their indices.  Single-zero queries for J' and Dini
functions use interlacing brackets built from the J table instead, giving
an independent route that the tests compare against the scan.
"""
from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field
from enum import Enum

import numpy as np
from scipy.special import zeta

from ._backend import kernels
from .bessel_core import DEFAULT_SERIES, SeriesConfig, check_order, dini, jv, rgamma
from .errors import BracketError, ConvergenceError, DomainError

SCAN_STEP = math.pi / 8.0
RESIDUAL_TOL = 1e-11
J_PRIME_FLOOR = 1e-8


class ZeroKind(Enum):
    BESSEL_J = "j"
    BESSEL_J_PRIME = "jp"
    DINI = "dini"


@dataclass(frozen=True)
class ZeroFamily:
    """One family of zeros for a fixed order.

    ``gamma`` only matters for ``DINI``; the Dini function is
    ``gamma*J_nu(x) + x*J'_nu(x) = (gamma+nu)*J_nu(x) - x*J_{nu+1}(x)``.
    """

    kind: ZeroKind
    nu: float
    gamma: float = 0.0

    def __post_init__(self):
        nu = check_order(self.nu, -1.0)
        object.__setattr__(self, "nu", nu)
        object.__setattr__(self, "gamma", float(self.gamma))
        if self.kind is ZeroKind.BESSEL_J_PRIME and nu <= 0.0:
            raise DomainError(f"J' zeros need nu > 0, got {nu}")
        if self.kind is ZeroKind.DINI and self.gamma + nu < 0.0:
            raise DomainError(
                f"gamma + nu = {self.gamma + nu} < 0: the Dini function has imaginary zeros"
            )

    @property
    def p(self) -> float:
        """Coefficient of J_nu in the ``p*J_nu - x*J_{nu+1}`` form."""
        if self.kind is ZeroKind.BESSEL_J:
            return 0.0
        if self.kind is ZeroKind.BESSEL_J_PRIME:
            return self.nu
        return self.gamma + self.nu

    @property
    def code(self) -> int:
        return 0 if self.kind is ZeroKind.BESSEL_J else 1

    def __call__(self, x: float) -> float:
        """Unscaled family value at ``x > 0`` through ``bessel_core``."""
        if self.kind is ZeroKind.BESSEL_J:
            return jv(self.nu, x)
        if self.kind is ZeroKind.BESSEL_J_PRIME:
            return self.nu * jv(self.nu, x) / x - jv(self.nu + 1.0, x)
        return dini(self.gamma, self.nu, x)

    def key(self):
        return (self.kind, round(self.nu, 12), round(self.gamma, 12))

    # large-index model c_n ~ a + b1/a + b3/a^3, a = pi*(n + delta)
    def mcmahon_delta(self) -> float:
        if self.kind is ZeroKind.BESSEL_J:
            return 0.5 * self.nu - 0.25
        return 0.5 * self.nu - 0.75

    def mcmahon_b1(self) -> float:
        nu2 = 4.0 * self.nu * self.nu
        if self.kind is ZeroKind.BESSEL_J:
            return -(nu2 - 1.0) / 8.0
        g = self.p - self.nu
        return (8.0 * g - nu2 - 3.0) / 8.0


def j_family(nu):
    return ZeroFamily(ZeroKind.BESSEL_J, nu)


def j_prime_family(nu):
    return ZeroFamily(ZeroKind.BESSEL_J_PRIME, nu)


def dini_family(gamma, nu):
    return ZeroFamily(ZeroKind.DINI, nu, gamma)


@dataclass(frozen=True)
class ZeroTable:
    """First ``len(zeros)`` positive zeros of a family, 1-based via :meth:`zero`.

    ``residuals`` are ``|G(c)| / scale`` where ``G`` is the scaled family
    function and ``scale`` its cancellation scale at ``c``.
    """

    family: ZeroFamily
    zeros: np.ndarray
    residuals: np.ndarray
    evaluations: int = 0
    _fit: tuple = field(default=None, repr=False, compare=False)
    _sums: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        for name in ("zeros", "residuals"):
            arr = np.ascontiguousarray(getattr(self, name), dtype=np.float64)
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    def __len__(self):
        return len(self.zeros)

    def zero(self, n: int) -> float:
        if not 1 <= n <= len(self.zeros):
            raise IndexError(f"zero index {n} outside 1..{len(self.zeros)}")
        return float(self.zeros[n - 1])

    def head(self, count: int) -> "ZeroTable":
        if count > len(self):
            raise ValueError("table too short")
        if count == len(self):
            return self
        return ZeroTable(self.family, self.zeros[:count], self.residuals[:count], self.evaluations)

    def asymptotic_fit(self):
        """``(delta, b1, b3)`` matched to the last tabulated zero."""
        if self._fit is None:
            fam = self.family
            n = len(self.zeros)
            c = float(self.zeros[-1])
            delta = fam.mcmahon_delta()
            b1 = fam.mcmahon_b1()
            # realign the index offset if the family starts earlier or later
            shift = round(c / math.pi - (n + delta))
            delta += shift
            a = math.pi * (n + delta)
            b3 = (c - a - b1 / a) * a ** 3
            object.__setattr__(self, "_fit", (delta, b1, b3))
        return self._fit

    def tail_power_sums(self, kmax: int) -> np.ndarray:
        """Estimates of ``S_k = sum_{n > N} c_n^(-2k)`` for ``k = 1..kmax``."""
        cached = self._sums.get(kmax)
        if cached is not None:
            return cached
        delta, b1, b3 = self.asymptotic_fit()
        q = len(self.zeros) + 1 + delta
        out = np.empty(kmax)
        for k in range(1, kmax + 1):
            s = 2 * k
            out[k - 1] = (
                math.pi ** -s * zeta(s, q)
                - s * b1 * math.pi ** (-s - 2) * zeta(s + 2, q)
                + (k * (2 * k + 1) * b1 * b1 - s * b3) * math.pi ** (-s - 4) * zeta(s + 4, q)
            )
        out.setflags(write=False)
        self._sums[kmax] = out
        return out

    def lower_bound_margin(self) -> float:
        """Smallest ``m >= 0`` with ``c_n >= pi*(n + nu/2 - 3/4) - m`` over the table."""
        nu = self.family.nu
        idx = np.arange(1, len(self.zeros) + 1)
        gap = math.pi * (idx + 0.5 * nu - 0.75) - self.zeros
        return max(0.0, float(gap.max()))


def _rg(nu):
    return rgamma(nu + 1.0), rgamma(nu + 2.0)


def scan_limit(nu: float, count: int) -> float:
    """Upper end of the zero scan: past the McMahon guess plus 2 pi."""
    return (count + 0.5 * abs(nu) + 1.0) * math.pi + 2.0 * math.pi


def build_table(family: ZeroFamily, count: int, cfg: SeriesConfig = DEFAULT_SERIES) -> ZeroTable:
    """Compute the first ``count`` zeros by sign-change scan (uncached)."""
    if count < 1:
        raise DomainError("count must be >= 1")
    rg0, rg1 = _rg(family.nu)
    try:
        zeros, resid, evals = kernels.family_zeros(
            family.code, family.nu, family.p, int(count), rg0, rg1,
            cfg.rel_tol, cfg.max_terms, SCAN_STEP, scan_limit(family.nu, count),
        )
    except ArithmeticError as exc:
        raise ConvergenceError(str(exc)) from exc
    if len(zeros) < count:
        raise BracketError(
            f"scan found {len(zeros)} of {count} zeros of {family} before the scan budget"
        )
    return ZeroTable(family, zeros, resid, evals)


_CACHE: dict = {}  # family key -> longest table built so far
_HEADS: dict = {}  # (family key, count) -> table of exactly that length
_CACHE_LOCK = threading.Lock()


def zero_table(family: ZeroFamily, count: int) -> ZeroTable:
    """Cached :func:`build_table`; a longer cached table is sliced.

    Tables are immutable, so concurrent callers can at worst duplicate work.
    """
    key = family.key()
    count = int(count)
    table = _HEADS.get((key, count))
    if table is not None:
        return table
    longest = _CACHE.get(key)
    if longest is not None and len(longest) >= count:
        table = longest.head(count)
    else:
        table = build_table(family, count)
    with _CACHE_LOCK:
        old = _CACHE.get(key)
        if old is None or len(old) < len(table):
            _CACHE[key] = table
        _HEADS.setdefault((key, count), table)
    return _HEADS[(key, count)]


def clear_cache():
    with _CACHE_LOCK:
        _CACHE.clear()
        _HEADS.clear()


def _refine(family, lo, hi, cfg=DEFAULT_SERIES):
    rg0, rg1 = _rg(family.nu)
    try:
        root, resid, it = kernels.refine_zero(
            family.code, family.nu, family.p, lo, hi, rg0, rg1, cfg.rel_tol, cfg.max_terms
        )
    except ArithmeticError as exc:
        raise ConvergenceError(str(exc)) from exc
    if it < 0:
        raise BracketError(f"no sign change of {family} on ({lo}, {hi})")
    if resid > RESIDUAL_TOL:
        raise ConvergenceError(f"zero of {family} has residual {resid:.3g}")
    return root


def _index(n):
    n = int(n)
    if n < 1:
        raise DomainError(f"zero index must be >= 1, got {n}")
    return n


def bessel_zero(nu: float, n: int = 1) -> float:
    """n-th positive zero ``j_{nu,n}`` of ``J_nu``, ``nu > -1``."""
    n = _index(n)
    return zero_table(j_family(nu), n).zero(n)


def bessel_derivative_zero(nu: float, n: int = 1) -> float:
    """n-th positive zero ``j'_{nu,n}`` of ``J'_nu``, ``nu > 0``.

    Bracketed by ``(j_{nu,n-1}, j_{nu,n})`` with ``j_{nu,0} = max(nu, 1e-8)``.
    """
    n = _index(n)
    fam = j_prime_family(nu)
    jt = zero_table(j_family(fam.nu), n)
    lo = max(fam.nu, J_PRIME_FLOOR) if n == 1 else jt.zero(n - 1)
    return _refine(fam, lo, jt.zero(n))


def dini_zero(gamma: float, nu: float, n: int = 1) -> float:
    """n-th positive zero of ``gamma*J_nu(x) + x*J'_nu(x)``; needs ``gamma + nu >= 0``.

    For ``gamma + nu > 0`` the n-th zero lies in ``(j_{nu,n-1}, j_{nu,n})``
    (with ``j_{nu,0} = 0``).  When ``gamma + nu = 0`` the function is
    ``-x J_{nu+1}(x)`` and the table scan is used instead.
    """
    n = _index(n)
    fam = dini_family(gamma, nu)
    if fam.p == 0.0:
        return zero_table(fam, n).zero(n)
    jt = zero_table(j_family(fam.nu), n)
    lo = J_PRIME_FLOOR if n == 1 else jt.zero(n - 1)
    return _refine(fam, lo, jt.zero(n))


def alpha_zero(nu: float, n: int = 1) -> float:
    """First-family Dini zero ``alpha_{nu,n}`` (gamma = 1 - nu)."""
    return dini_zero(1.0 - nu, nu, n)


def beta_zero(nu: float, n: int = 1) -> float:
    """Second-family Dini zero ``beta_{nu,n}`` (gamma = 2 - nu)."""
    return dini_zero(2.0 - nu, nu, n)


def alpha_family(nu):
    return dini_family(1.0 - float(nu), nu)


def beta_family(nu):
    return dini_family(2.0 - float(nu), nu)

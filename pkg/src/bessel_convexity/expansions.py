"""Partial-fraction (Mittag-Leffler) forms of the convexity quotients.

With ``E_c(z) = sum 2 z^2 / (c_n^2 - z^2)`` and ``L_c(z) = sum z / (c_n^2 - z)``::

    Q_F   = 1 - (1/nu - 1) E_j(z) - E_j'(z)
    Q_G   = 1 - E_alpha(z)
    Q_H   = 1 - L_beta(z)
    Q_PHI = 1 - L_{j(nu+1)}(z)

The sums are truncated after ``n_terms`` zeros.  What happens beyond is set
by :class:`TailMode`:

``NONE``
    plain truncation; the error is of order ``|z|^2 / n_terms``.
``MCMAHON_BOUND``
    plain truncation plus a rigorous bound on the omitted tail, from the
    lower bound ``c_n >= pi (n + nu/2 - 3/4) - margin`` and an integral
    comparison.
``ASYMPTOTIC``
    the omitted tail is added as ``sum_k z^(2k) S_k`` where the power sums
    ``S_k`` of the missing zeros come from McMahon's expansion fitted to the
    last tabulated zero (Hurwitz zeta closed forms).  The bound is still
    reported.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from ._backend import kernels
from .errors import DomainError, PoleProximityError
from .normalized_maps import MapKind, check_window, convexity_quotient, first_pole, pole_families
from .zero_finder import ZeroTable, zero_table

POLE_REL_GAP = 1e-12
_TAIL_KMAX = 12


class TailMode(Enum):
    NONE = "none"
    MCMAHON_BOUND = "mcmahon_bound"
    ASYMPTOTIC = "asymptotic"


@dataclass(frozen=True)
class ExpansionConfig:
    n_terms: int = 200
    tail_mode: TailMode = TailMode.ASYMPTOTIC

    def __post_init__(self):
        if int(self.n_terms) != self.n_terms or self.n_terms < 10:
            raise DomainError(f"n_terms must be an integer >= 10, got {self.n_terms}")
        object.__setattr__(self, "tail_mode", TailMode(self.tail_mode))


DEFAULT_EXPANSION = ExpansionConfig()


@dataclass(frozen=True)
class ExpansionValue:
    value: complex
    tail: complex
    tail_bound: float
    n_terms: int


def _weights(kind, nu):
    if kind is MapKind.F:
        return (1.0 / nu - 1.0, 1.0)
    return (1.0,)


def _tables(kind, nu, n):
    return [zero_table(fam, n) for fam in pole_families(kind, nu)]


def _check_poles(table: ZeroTable, u: complex):
    # u is z^2 (even kinds) or z (linear kinds); poles sit at c^2
    c2 = table.zeros * table.zeros
    gap = np.abs(c2 - u) / c2
    i = int(np.argmin(gap))
    if gap[i] < POLE_REL_GAP:
        raise PoleProximityError(
            f"z is within {gap[i]:.2g} (relative) of the pole at c={table.zeros[i]!r}"
        )


def _tail_bound_one(table: ZeroTable, rho: float, even: bool) -> float:
    # integral comparison against the lower bound L_n for n > N
    n = len(table)
    lower = math.pi * (n + 0.5 * table.family.nu - 0.75) - table.lower_bound_margin()
    x = rho if even else math.sqrt(rho)
    if lower <= x:
        return math.inf
    b = x / math.pi * math.log((lower + x) / (lower - x))
    return b if even else 0.5 * b


def _tail_series(table: ZeroTable, z: complex, even: bool) -> complex:
    u = z * z if even else z
    c_next2 = (math.pi * (len(table) + 1 + table.asymptotic_fit()[0])) ** 2
    if abs(u) >= 0.25 * c_next2:
        raise DomainError("|z| too large for the asymptotic tail; increase n_terms")
    sums = table.tail_power_sums(_TAIL_KMAX)
    total = 0j
    p = 1.0 + 0j
    for k in range(_TAIL_KMAX):
        p *= u
        term = p * sums[k]
        total += term
        if abs(term) <= 1e-18 * max(abs(total), 1e-300):
            break
    return 2.0 * total if even else total


def _sum(table, z, even):
    zeros = table.zeros
    if even:
        sr, si = kernels.ml_even(zeros, z.real, z.imag)
    else:
        sr, si = kernels.ml_linear(zeros, z.real, z.imag)
    return complex(float(sr), float(si))


def ml_expansion(kind, nu: float, z: complex, cfg: ExpansionConfig = DEFAULT_EXPANSION) -> ExpansionValue:
    """Truncated expansion of ``Q`` with its tail treatment and tail bound."""
    kind = MapKind.parse(kind)
    nu = check_window(kind, nu)
    z = complex(z)
    even = kind.even
    n = int(cfg.n_terms)
    value = 1.0 + 0j
    tail = 0j
    bound = 0.0
    for wt, table in zip(_weights(kind, nu), _tables(kind, nu, n)):
        _check_poles(table, z * z if even else z)
        value -= wt * _sum(table, z, even)
        if cfg.tail_mode is not TailMode.NONE:
            bound += abs(wt) * _tail_bound_one(table, abs(z), even)
        if cfg.tail_mode is TailMode.ASYMPTOTIC:
            tail -= wt * _tail_series(table, z, even)
    if cfg.tail_mode is TailMode.NONE:
        bound = math.nan
    return ExpansionValue(complex(value + tail), complex(tail), float(bound), n)


def ml_quotient(kind, nu: float, z: complex, cfg: ExpansionConfig = DEFAULT_EXPANSION) -> complex:
    """Mittag-Leffler value of the convexity quotient."""
    return ml_expansion(kind, nu, z, cfg).value


def ml_tail_bound(kind, nu: float, r: float, cfg: ExpansionConfig = DEFAULT_EXPANSION) -> float:
    """Rigorous bound on the truncation error of the plain sum on ``|z| <= r``."""
    kind = MapKind.parse(kind)
    nu = check_window(kind, nu)
    n = int(cfg.n_terms)
    return sum(
        abs(wt) * _tail_bound_one(t, float(r), kind.even)
        for wt, t in zip(_weights(kind, nu), _tables(kind, nu, n))
    )


def ml_identity_residual(kind, nu: float, z: complex, cfg: ExpansionConfig = DEFAULT_EXPANSION) -> float:
    """``|closed form - expansion|`` at ``z``."""
    return abs(convexity_quotient(kind, nu, z) - ml_quotient(kind, nu, z, cfg))


def _check_radius(kind, nu, r):
    r = float(r)
    if not math.isfinite(r) or r < 0.0:
        raise DomainError(f"radius must be finite and >= 0, got {r}")
    pole = first_pole(kind, nu)
    if r >= pole:
        raise PoleProximityError(f"r={r} is not inside the first pole {pole}")
    return r


def lower_envelope(kind, nu: float, r: float, cfg: ExpansionConfig = DEFAULT_EXPANSION) -> float:
    """``min Re Q`` over ``|z| <= r``, which equals ``Q(r)`` on the real axis.

    Evaluated from the closed form; ``cfg`` is accepted for interface
    symmetry with the other expansion routines.
    """
    kind = MapKind.parse(kind)
    nu = check_window(kind, nu)
    r = _check_radius(kind, nu, r)
    if r == 0.0:
        return 1.0
    return convexity_quotient(kind, nu, r).real


def envelope_slope(kind, nu: float, r: float, cfg: ExpansionConfig = DEFAULT_EXPANSION) -> float:
    """``d/dr Q(r)`` from the termwise-differentiated expansion (always negative)."""
    kind = MapKind.parse(kind)
    nu = check_window(kind, nu)
    r = _check_radius(kind, nu, r)
    even = kind.even
    n = int(cfg.n_terms)
    slope = 0.0
    for wt, table in zip(_weights(kind, nu), _tables(kind, nu, n)):
        if even:
            d = float(kernels.ml_even_dr(table.zeros, r))
        else:
            d = float(kernels.ml_linear_dr(table.zeros, r))
        if cfg.tail_mode is TailMode.ASYMPTOTIC:
            sums = table.tail_power_sums(_TAIL_KMAX)
            for k in range(1, _TAIL_KMAX + 1):
                d += (4 * k * r ** (2 * k - 1) if even else k * r ** (k - 1)) * sums[k - 1]
        slope -= wt * d
    return float(slope)

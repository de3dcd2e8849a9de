"""Quick self-checks run by ``bessel-convexity verify``.

Each check returns a :class:`Check` with the worst observed error and the
bound it is held to.  The grids are small so the whole suite runs in a
couple of seconds; the test suite covers the same ground more densely.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from .bessel_core import bessel_j, bessel_j_poisson, rayleigh_sum
from .expansions import ml_identity_residual
from .normalized_maps import MapKind, first_pole
from .radius import radius_convexity
from .thresholds import conjecture_evidence, critical_order
from .zero_finder import alpha_zero, bessel_derivative_zero, bessel_zero, beta_zero, j_family, zero_table


@dataclass(frozen=True)
class Check:
    name: str
    worst: float
    bound: float
    passed: bool

    def as_dict(self):
        return asdict(self)


def _check(name, worst, bound):
    return Check(name, float(worst), float(bound), bool(worst <= bound))


def check_oracle(bound=1e-10):
    worst = 0.0
    for nu in np.linspace(-0.4, 10.0, 10):
        for x in np.linspace(1.0, 10.0, 10):
            worst = max(worst, abs(bessel_j(nu, x).real - bessel_j_poisson(nu, x)))
    return _check("series_vs_poisson", worst, bound)


def check_expansions(n_terms=200, bound=1e-9):
    from .expansions import ExpansionConfig

    cfg = ExpansionConfig(n_terms)
    rng = np.random.default_rng(7)
    worst = 0.0
    for kind in MapKind:
        for _ in range(5):
            nu = rng.uniform(kind.nu_floor + 0.1, 6.0)
            z = rng.uniform(0.0, 0.9) * first_pole(kind, nu) * np.exp(1j * rng.uniform(0, 2 * np.pi))
            worst = max(worst, ml_identity_residual(kind, nu, z, cfg))
    return _check("mittag_leffler_identity", worst, bound)


def check_interlacing():
    bad = 0
    for nu in np.linspace(0.4, 8.0, 20):
        chain = [nu, bessel_derivative_zero(nu, 1), bessel_zero(nu, 1),
                 bessel_derivative_zero(nu, 2), bessel_zero(nu, 2)]
        bad += sum(1 for a, b in zip(chain, chain[1:]) if not a < b)
        j1 = chain[2]
        bad += sum(1 for c in (alpha_zero(nu), beta_zero(nu)) if not 1.0 < c < j1)
    return _check("interlacing_and_dini_bounds", bad, 0)


def check_rayleigh(bound=1e-8):
    worst = 0.0
    for nu in (0.0, 0.5, 1.0, 2.0):
        z = zero_table(j_family(nu), 200).zeros
        worst = max(worst, abs(math.fsum(z ** -4.0) - rayleigh_sum(nu, 4)))
    return _check("rayleigh_sum_n200", worst, bound)


def check_thresholds(bound=1e-6):
    worst = 0.0
    for kind in MapKind:
        for alpha in (0.0, 0.25, 0.5, 0.75):
            nu = critical_order(kind, alpha).nu_critical
            worst = max(worst, abs(radius_convexity(kind, nu, alpha).radius - 1.0))
    return _check("threshold_radius_consistency", worst, bound)


def check_conjecture(bound=-1e-3):
    lo = conjecture_evidence(-1.6)
    hi = conjecture_evidence(-1.5)
    # worst is the larger of Q(-1.6) and -Q(-1.5); both must be <= -1e-3
    worst = max(lo.q_at_one, lo.boundary_min, -hi.q_at_one, -hi.boundary_min)
    return _check("conjecture_sign_change", worst, bound)


ALL_CHECKS = (check_oracle, check_expansions, check_interlacing, check_rayleigh,
              check_thresholds, check_conjecture)


def run_all(n_terms=200):
    out = []
    for fn in ALL_CHECKS:
        out.append(fn(n_terms=n_terms) if fn is check_expansions else fn())
    return out

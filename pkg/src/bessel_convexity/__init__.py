"""Radii of convexity of normalized Bessel functions.

Bessel and Dini zeros, closed-form and partial-fraction convexity quotients,
radius and critical-order solvers, and a boundary-sampling oracle.
"""
from ._backend import BACKEND
from .bessel_core import (
    DEFAULT_SERIES,
    SeriesConfig,
    bessel_j,
    bessel_j_derivative,
    bessel_j_poisson,
    dini,
    gamma_fn,
    jv,
    rayleigh_sum,
)
from .disk import BoundaryScan, Certificate, boundary_min_real, convexity_certificate
from .errors import (
    BesselConvexityError,
    BracketError,
    ConvergenceError,
    DomainError,
    PoleProximityError,
)
from .expansions import (
    ExpansionConfig,
    TailMode,
    lower_envelope,
    ml_identity_residual,
    ml_quotient,
    ml_tail_bound,
)
from .normalized_maps import MapKind, convexity_quotient, first_pole, phi_quotient_identity_check
from .radius import RadiusResult, radius_convexity, radius_starlikeness
from .thresholds import (
    ConjectureEvidence,
    ThresholdResult,
    conjecture_disproof,
    conjecture_evidence,
    critical_order,
    special_constants,
)
from .zero_finder import (
    ZeroFamily,
    ZeroKind,
    ZeroTable,
    alpha_zero,
    bessel_derivative_zero,
    bessel_zero,
    beta_zero,
    dini_zero,
    zero_table,
)

__version__ = "0.1.0"

"""Boundary sampling of Re Q on circles, independent of the real-axis envelope.

Re Q is harmonic inside the first pole, so its minimum over a closed disk is
on the boundary circle.  Sampling that circle gives a check on convexity
claims that does not rely on the minimum sitting on the positive real axis.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, PoleProximityError
from .normalized_maps import MapKind, check_window, convexity_quotient, first_pole

DEFAULT_SAMPLES = 720
_TIE_REL = 1e-13


@dataclass(frozen=True)
class BoundaryScan:
    kind: MapKind
    nu: float
    r: float
    n_samples: int
    min_real: float
    argmin_angle: float
    mean_real: float

    def as_dict(self):
        return {
            "kind": self.kind.value, "nu": self.nu, "r": self.r, "n_samples": self.n_samples,
            "min_real": self.min_real, "argmin_angle": self.argmin_angle, "mean_real": self.mean_real,
        }


def boundary_min_real(kind, nu: float, r: float, n_samples: int = DEFAULT_SAMPLES) -> BoundaryScan:
    """Minimum of ``Re Q`` over ``n_samples`` equiangular points of ``|z| = r``.

    Ties (F and G are even, so angles 0 and pi give the same value) resolve to
    the smallest angle.
    """
    kind = MapKind.parse(kind)
    nu = check_window(kind, nu)
    r = float(r)
    n_samples = int(n_samples)
    if n_samples < 64:
        raise DomainError(f"n_samples must be >= 64, got {n_samples}")
    if not (math.isfinite(r) and r >= 0.0):
        raise DomainError(f"radius must be finite and >= 0, got {r}")
    pole = first_pole(kind, nu)
    if r >= pole:
        raise PoleProximityError(f"circle |z|={r} reaches the first pole {pole}")
    angles = 2.0 * math.pi * np.arange(n_samples) / n_samples
    values = np.array([
        convexity_quotient(kind, nu, complex(r * math.cos(t), r * math.sin(t))).real for t in angles
    ])
    vmin = float(values.min())
    ties = np.nonzero(values <= vmin + _TIE_REL * max(1.0, abs(vmin)))[0]
    k = int(ties[0])
    return BoundaryScan(kind, nu, r, n_samples, vmin, float(angles[k]), float(values.mean()))


@dataclass(frozen=True)
class Certificate:
    certified: bool
    margin: float
    alpha: float
    scan: BoundaryScan

    def __bool__(self):
        return self.certified


def convexity_certificate(kind, nu: float, r: float, alpha: float = 0.0,
                          n_samples: int = DEFAULT_SAMPLES) -> Certificate:
    """Whether ``Re Q > alpha`` on the sampled circle ``|z| = r``, with the margin."""
    scan = boundary_min_real(kind, nu, r, n_samples)
    margin = scan.min_real - float(alpha)
    return Certificate(margin > 0.0, margin, float(alpha), scan)


def real_part_inequality_gap(a: float, b: float, lam: float, z: complex) -> float:
    """``lam Re(z/(a-z)) - Re(z/(b-z)) - (lam |z|/(a-|z|) - |z|/(b-|z|))``.

    Non-negative whenever ``a > b > |z| > 0`` and ``0 <= lam <= 1``.
    """
    z = complex(z)
    s = abs(z)
    if not (a > b > s > 0.0) or not (0.0 <= lam <= 1.0):
        raise DomainError("need a > b > |z| > 0 and lam in [0, 1]")
    lhs = lam * (z / (a - z)).real - (z / (b - z)).real
    rhs = lam * s / (a - s) - s / (b - s)
    return lhs - rhs

import cmath
import math

import numpy as np
import pytest

from bessel_convexity import normalized_maps as nm
from bessel_convexity.bessel_core import jv
from bessel_convexity.errors import DomainError, PoleProximityError
from bessel_convexity.normalized_maps import (
    MapKind,
    convexity_quotient,
    first_pole,
    phi_quotient_identity_check,
)
from bessel_convexity.zero_finder import alpha_zero, bessel_derivative_zero, bessel_zero, beta_zero

from .oracles import CONSTANTS, QUOTIENT, THRESHOLDS


@pytest.mark.parametrize("kind", list(MapKind))
def test_value_at_origin(kind):
    for nu in (0.3, 1.0, 4.0):
        assert convexity_quotient(kind, nu, 0) == 1.0


def test_examples():
    assert convexity_quotient("h", 1.25, 1.0).real == pytest.approx(0.75, abs=1e-13)
    assert abs(convexity_quotient("phi", THRESHOLDS[("phi", 0.0)], 1.0)) < 1e-12
    assert convexity_quotient("g", 1.0, 1.0).real == pytest.approx(0.0, abs=1e-13)
    assert convexity_quotient("f", 1.0, 1.0).real == pytest.approx(0.0, abs=1e-13)


@pytest.mark.parametrize("kind,nu,z,ref", QUOTIENT)
def test_frozen_values(kind, nu, z, ref):
    assert abs(convexity_quotient(kind, nu, z) - ref) <= 1e-12 * max(1.0, abs(ref))


def test_phi_identity():
    rng = np.random.default_rng(3)
    for _ in range(100):
        nu = rng.uniform(-1.7, 6.0)
        z = rng.uniform(0.0, 0.9) * first_pole("phi", nu) * cmath.exp(1j * rng.uniform(-math.pi, math.pi))
        q = convexity_quotient("phi", nu, z)
        assert phi_quotient_identity_check(nu, z) <= 1e-11 * max(1.0, abs(q))
    assert phi_quotient_identity_check(0.5, 0) == 0.0


def test_normalization_slope():
    # Q(z) - 1 vanishes at the origin like z^2 (F, G) or z (H, PHI)
    for kind in MapKind:
        nu = 1.5
        for eps in (1e-3, 1e-4):
            d = abs(convexity_quotient(kind, nu, eps) - 1)
            assert d <= 10 * (eps * eps if kind.even else eps)


def test_conjugate_symmetry():
    rng = np.random.default_rng(5)
    for kind in MapKind:
        for _ in range(10):
            nu = rng.uniform(kind.nu_floor + 0.2, 5.0)
            z = complex(*rng.uniform(-1, 1, 2))
            a = convexity_quotient(kind, nu, z)
            b = convexity_quotient(kind, nu, z.conjugate())
            assert a == pytest.approx(b.conjugate(), abs=1e-13)


def test_f_matches_log_derivative_form_at_one():
    # Q_F(1) = 1 + J''/J' + (1/nu - 1) J'/J at z = 1
    for nu in (0.6, 1.0, 2.0, 5.0):
        j = jv(nu, 1.0)
        jp = nu * j - jv(nu + 1, 1.0)
        jpp = -jp - (1 - nu * nu) * j   # Bessel's equation at x = 1
        expected = 1 + jpp / jp + (1 / nu - 1) * jp / j
        assert convexity_quotient("f", nu, 1.0).real == pytest.approx(expected, rel=1e-12)


def test_closed_forms_at_one():
    for nu in np.linspace(-0.9, 5, 25):
        j0, j1 = jv(nu, 1.0), jv(nu + 1.0, 1.0)
        assert convexity_quotient("g", nu, 1.0).real == pytest.approx((2 * nu - 2) * j1 / (j0 - j1), rel=1e-11, abs=1e-13)
        assert convexity_quotient("h", nu, 1.0).real == pytest.approx(
            ((2 * nu - 4) * j1 + 3 * j0) / (2 * (2 * j0 - j1)), rel=1e-11, abs=1e-13)
        assert convexity_quotient("phi", nu, 1.0).real == pytest.approx(j0 / (2 * j1) - nu, rel=1e-11, abs=1e-13)


def test_windows():
    with pytest.raises(DomainError):
        convexity_quotient("f", 0.0, 0.5)
    with pytest.raises(DomainError):
        convexity_quotient("g", -1.0, 0.5)
    with pytest.raises(DomainError):
        convexity_quotient("phi", -2.0, 0.5)
    with pytest.raises(DomainError):
        convexity_quotient("q", 1.0, 0.5)
    with pytest.raises(DomainError):
        convexity_quotient("g", 1.0, complex(math.inf, 0))
    assert MapKind.parse("PHI") is MapKind.PHI


def test_first_pole_values():
    assert first_pole("f", 2.0) == bessel_derivative_zero(2.0, 1)
    assert first_pole("g", 0.3) == alpha_zero(0.3)
    assert first_pole("h", 0.3) == pytest.approx(beta_zero(0.3) ** 2)
    assert first_pole("phi", -1.5) == pytest.approx(bessel_zero(-0.5, 1) ** 2)
    assert first_pole("phi", CONSTANTS["nu_star_phi"]) == pytest.approx(1.0, abs=1e-9)


def test_pole_proximity(monkeypatch):
    monkeypatch.setattr(nm, "DENOM_FLOOR", 1e-3)
    c = first_pole("g", 1.0)
    with pytest.raises(PoleProximityError):
        convexity_quotient("g", 1.0, c)


def test_quotient_blows_up_near_pole():
    for kind in MapKind:
        c = first_pole(kind, 0.8)
        assert convexity_quotient(kind, 0.8, 0.9999 * c).real < -100

import math

import numpy as np
import pytest

from bessel_convexity.bessel_core import jv
from bessel_convexity.errors import DomainError
from bessel_convexity.normalized_maps import MapKind, convexity_quotient
from bessel_convexity.thresholds import (
    auxiliary_bound_function,
    conjecture_disproof,
    conjecture_evidence,
    critical_order,
    equation_value,
    nu_star,
    nu_star_phi,
    nu_two,
    special_constants,
)

from .oracles import CONSTANTS, THRESHOLDS


@pytest.mark.parametrize("key", sorted(THRESHOLDS, key=str))
def test_frozen_thresholds(key):
    kind, alpha = key
    res = critical_order(kind, alpha)
    assert res.nu_critical == pytest.approx(THRESHOLDS[key], abs=1e-10)
    assert res.equation_residual <= 1e-10
    lo, hi = res.search_window
    assert lo <= res.nu_critical <= hi


def test_exact_thresholds():
    assert critical_order("f", 0.0).nu_critical == 1.0
    assert critical_order("g", 0.0).nu_critical == pytest.approx(1.0, abs=1e-8)
    assert critical_order("h", 0.75).nu_critical == pytest.approx(1.25, abs=1e-8)


def test_equation_matches_quotient_sign():
    # the division-free equation changes sign exactly where Q(1) crosses alpha
    for kind in MapKind:
        for alpha in (0.0, 0.25, 0.5, 0.75):
            nu0 = THRESHOLDS[(kind.value, alpha)]
            above = convexity_quotient(kind, nu0 + 1e-3, 1.0).real - alpha
            below = convexity_quotient(kind, nu0 - 1e-3, 1.0).real - alpha
            assert above > 0 > below


def test_thresholds_increase_with_alpha():
    for kind in MapKind:
        vals = [critical_order(kind, a).nu_critical for a in (0.0, 0.1, 0.3, 0.5, 0.7, 0.9)]
        assert np.all(np.diff(vals) > 0), kind


@pytest.mark.parametrize("fn,name", [(nu_star, "nu_star"), (nu_star_phi, "nu_star_phi"), (nu_two, "nu_two")])
def test_constants(fn, name):
    c = fn()
    assert c.name == name
    assert c.value == pytest.approx(CONSTANTS[name], abs=1e-12)
    assert c.residual <= 1e-10
    assert set(special_constants()) == {"nu_star", "nu_star_phi", "nu_two"}


def test_constant_meanings():
    ns = nu_star().value
    assert abs(ns * jv(ns, 1.0) - jv(ns + 1, 1.0)) < 1e-14
    assert abs(jv(nu_star_phi().value + 1, 1.0)) < 1e-14
    assert 0 < nu_two().value < ns < 1


def test_auxiliary_function():
    assert auxiliary_bound_function(0.0) == pytest.approx(0.0151, abs=5e-4)
    xs = np.linspace(0, 10, 200)
    assert np.all(np.diff([auxiliary_bound_function(x) for x in xs]) < 0)


def test_equation_value_residual_scale():
    v, r = equation_value("g", 0.0, 1.0)
    assert abs(v) < 1e-15 and r < 1e-14


def test_alpha_validation():
    with pytest.raises(DomainError):
        critical_order("g", 1.0)
    with pytest.raises(DomainError):
        critical_order("g", -0.2)


class TestConjecture:
    def test_disproof(self):
        ev = conjecture_disproof()
        assert ev.nu == -1.6 and ev.verdict == "NOT_CONVEX"
        assert ev.q_at_one < -1e-3 and ev.boundary_min < -1e-3

    def test_convex_side(self):
        ev = conjecture_evidence(-1.5)
        assert ev.verdict == "CONVEX" and ev.q_at_one > 1e-3 and ev.boundary_min > 1e-3

    def test_threshold_point(self):
        ev = conjecture_evidence(THRESHOLDS[("phi", 0.0)])
        assert abs(ev.q_at_one) < 1e-8

    def test_below_pole_crossing(self):
        ev = conjecture_evidence(-1.8)
        assert ev.pole < 1 and ev.verdict == "NOT_CONVEX" and ev.boundary_min == -math.inf

    @pytest.mark.parametrize("probe", [-1.5, -1.9, -1.875])
    def test_probe_window(self, probe):
        with pytest.raises(DomainError):
            conjecture_disproof(probe)

import cmath
import math

import pytest
from hypothesis import given, settings, strategies as st

from hightrig import quadrature as q
from hightrig.hyp2f1 import (MAX_TERMS, SeriesConvergenceError, gauss_2f1, sigma_hyp, tau_hyp)


def test_zero_argument():
    assert gauss_2f1(0.3, 0.7, 1.2, 0.0) == 1


def test_arcsin_form():
    assert abs(gauss_2f1(0.5, 0.5, 1.5, 0.25) - math.pi / 3) < 1e-15


def test_arctan_form():
    assert abs(gauss_2f1(0.5, 1.0, 1.5, -0.25) - math.atan(0.5) / 0.5) < 1e-15


def test_rejects_outside_regime():
    with pytest.raises(SeriesConvergenceError):
        gauss_2f1(0.5, 0.5, 1.5, 0.96)
    with pytest.raises(SeriesConvergenceError):
        sigma_hyp(3, 0.99)
    with pytest.raises(ValueError):
        gauss_2f1(0.5, 0.5, -2.0, 0.1)


def test_term_cap_enforced():
    with pytest.raises(SeriesConvergenceError):
        gauss_2f1(0.5, 0.5, 1.5, 0.95, max_terms=50)


@pytest.mark.parametrize("p", range(2, 9))
def test_term_count_below_500_inside_0_9(p):
    for a, b, c in [(1 / p, 1 - 1 / p, 1 + 1 / p), (1 / p, 2 / p, 1 + 1 / p)]:
        for j in range(8):
            z = 0.9 * cmath.exp(2j * math.pi * j / 8)
            assert gauss_2f1(a, b, c, z, full=True).terms <= 500


@pytest.mark.parametrize("p", range(2, 9))
def test_term_count_within_cap_at_0_95(p):
    for j in range(8):
        z = 0.95 * cmath.exp(2j * math.pi * j / 8)
        assert gauss_2f1(1 / p, 1 - 1 / p, 1 + 1 / p, z, full=True).terms <= MAX_TERMS


def test_sigma_hyp_matches_quadrature():
    assert sigma_hyp(3, 0) == 0
    assert abs(sigma_hyp(3, 0.5) - q.sigma_odd(3, 0.5)) < 1e-12


def test_sigma_rotation_equivariance():
    w = 0.5
    alpha = 1j
    assert abs(sigma_hyp(4, alpha * w) - alpha * sigma_hyp(4, w)) < 1e-15


def test_tau_p2_is_arctan():
    assert tau_hyp(2, 0) == 0
    assert abs(tau_hyp(2, 0.5) - math.atan(0.5)) < 1e-15


def test_tau_p5_matches_quadrature():
    assert abs(tau_hyp(5, 0.7) - q.tau_quad(5, 0.7)) < 1e-12


@pytest.mark.parametrize("p", range(2, 9))
def test_oracle_agreement_real_segment_and_circle(p):
    rad = 0.9
    pts = [-rad + 2 * rad * j / 19 for j in range(20)]
    pts += [0.6 * cmath.exp(2j * math.pi * j / 20) for j in range(20)]
    for w in pts:
        if abs(w) ** p > 0.95:
            continue
        assert abs(sigma_hyp(p, w) - q.sigma_complex(p, w)) < 1e-11
        assert abs(tau_hyp(p, w) - q.tau_quad(p, w)) < 1e-11


@given(st.floats(-0.9, 0.9))
@settings(max_examples=50, deadline=None)
def test_arcsin_property(x):
    assert abs(x * gauss_2f1(0.5, 0.5, 1.5, x * x) - math.asin(x)) < 2e-15 * max(1.0, abs(math.asin(x)))

import math

import pytest
from hypothesis import given, settings, strategies as st

from hightrig import quadrature as q
from hightrig.constants import constants_for
from hightrig.real_trig import (AT_POLE, OUT_OF_DOMAIN, eval_real, invert_sigma,
                                real_domain, t_real)

from oracles import S_REAL


@pytest.mark.parametrize("p,x,ref", S_REAL)
def test_frozen_real_values(p, x, ref):
    assert abs(eval_real(p, x).s - ref) < 1e-13 * max(1.0, abs(ref))


def test_domains():
    d4 = real_domain(4)
    assert d4.kind == "whole_line_periodic" and d4.period == pytest.approx(4 * constants_for(4).A)
    assert real_domain(2).period == pytest.approx(2 * math.pi)
    d3 = real_domain(3)
    k = constants_for(3)
    assert d3.kind == "open_interval"
    assert (d3.lower, d3.upper) == (-k.B, k.A + k.B)
    assert not d3.contains(d3.upper) and d3.contains(1.0)


def test_invert_sigma():
    assert invert_sigma(4, 0.0) == 0.0
    for p in (2, 3, 4, 5):
        assert abs(invert_sigma(p, constants_for(p).A) - 1.0) < 1e-13
    k = constants_for(3)
    x = invert_sigma(3, -k.B + 0.1)
    assert x < -5
    assert abs(q.sigma_odd(3, x) - (-k.B + 0.1)) < 1e-11
    with pytest.raises(ValueError):
        invert_sigma(4, 2 * k.A)
    with pytest.raises(ValueError):
        invert_sigma(3, -k.B)


def test_initial_values_and_special_points():
    e = eval_real(5, 0.0)
    assert (e.s, e.c, e.t) == (0.0, 1.0, 0.0)
    for p in (4, 6):
        e = eval_real(p, 2 * constants_for(p).A)
        assert abs(e.s) < 1e-15 and abs(e.c + 1) < 1e-15 and abs(e.t) < 1e-15


def test_t_special_values():
    assert t_real(3, 0.0) == 0.0
    for p in (2, 3, 4, 7):
        assert abs(t_real(p, constants_for(p).K) - 1) < 1e-13
    e = eval_real(4, constants_for(4).A)
    assert e.status == AT_POLE and e.t == math.inf


def test_odd_blowup_direction():
    k = constants_for(3)
    e = eval_real(3, k.A + k.B - 1e-3)
    assert e.status == "ok" and e.s > 100 and e.c < -100


@pytest.mark.parametrize("p", [3, 5, 7])
def test_blowup_monotone_and_asymptotic(p):
    k = constants_for(p)
    vals = [eval_real(p, k.A + k.B - 10.0 ** -j).s for j in range(1, 7)]
    assert all(b > a for a, b in zip(vals, vals[1:]))
    amp = ((p - 2) * 1e-6) ** (-1.0 / (p - 2))
    assert abs(vals[-1] / amp - 1) < 2e-3
    if p == 3:
        assert vals[-1] > 1e3


@pytest.mark.parametrize("p", [3, 5])
def test_out_of_domain_is_status(p):
    k = constants_for(p)
    for x in (k.A + k.B, -k.B, 10.0, -10.0, math.inf, math.nan):
        e = eval_real(p, x)
        assert e.status == OUT_OF_DOMAIN and math.isnan(e.s)
    assert math.isnan(t_real(p, 10.0))


@pytest.mark.parametrize("p", range(2, 9))
def test_round_trip(p):
    # past K the reduced variable is A - x and the value recovered is c
    k = constants_for(p)
    lo = 0.0 if p % 2 == 0 else -k.B + 0.05
    for j in range(50):
        x = lo + (k.A - lo) * j / 49
        e = eval_real(p, x)
        if x <= k.K:
            assert abs(q.sigma(p, e.s) - x) < 1e-10
        else:
            assert abs(q.sigma(p, e.c) - (k.A - x)) < 1e-10


def test_round_trip_after_period_reduction():
    k = constants_for(4)
    for x in (0.3 + 4 * k.A, 0.3 - 8 * k.A, -0.3 + 2 * k.A):
        assert abs(abs(q.sigma0(4, eval_real(4, x).s)) - 0.3) < 1e-10


@pytest.mark.parametrize("p", [3, 4, 5, 6, 8])
def test_pythagorean_and_bounds(p):
    k = constants_for(p)
    lo, hi = (-k.B * 0.98, (k.A + k.B) * 0.98) if p % 2 else (-3 * k.A, 3 * k.A)
    for j in range(60):
        e = eval_real(p, lo + (hi - lo) * j / 59)
        assert e.pythagorean_residual() < 1e-10
        if p % 2 == 0:
            assert abs(e.s) <= 1 + 1e-12 and abs(e.c) <= 1 + 1e-12
            assert abs(e.s ** p + e.c ** p - 1) < 1e-10


@pytest.mark.parametrize("p", [3, 4, 5, 6])
def test_ode_residual(p):
    h = 1e-5
    k = constants_for(p)
    for x in [0.1, 0.5, k.K, 1.3, -0.4]:
        a, b, m = eval_real(p, x - h), eval_real(p, x + h), eval_real(p, x)
        assert abs((b.s - a.s) / (2 * h) - m.c ** (p - 1)) < 1e-6
        assert abs((b.c - a.c) / (2 * h) + m.s ** (p - 1)) < 1e-6


@pytest.mark.parametrize("p", [2, 4, 6, 8])
@given(x=st.floats(-20.0, 20.0))
@settings(max_examples=30, deadline=None)
def test_even_symmetries(p, x):
    k = constants_for(p)
    e = eval_real(p, x)
    m = eval_real(p, -x)
    assert abs(m.s + e.s) < 1e-12 and abs(m.c - e.c) < 1e-12
    f = eval_real(p, x + 4 * k.A)
    assert abs(f.s - e.s) < 1e-10 and abs(f.c - e.c) < 1e-10
    g = eval_real(p, x + 2 * k.A)
    assert abs(g.s + e.s) < 1e-10 and abs(g.c + e.c) < 1e-10


@pytest.mark.parametrize("p", [2, 3, 4, 5, 6])
@given(u=st.floats(0.0, 1.0))
@settings(max_examples=30, deadline=None)
def test_complementarity_on_line(p, u):
    k = constants_for(p)
    x = u * k.A
    assert abs(eval_real(p, k.A - x).c - eval_real(p, x).s) < 1e-10


def test_p2_is_sine():
    for j in range(200):
        x = 2 * math.pi * j / 199
        e = eval_real(2, x)
        assert abs(e.s - math.sin(x)) < 1e-10 and abs(e.c - math.cos(x)) < 1e-10

import cmath
import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from hightrig import complex_trig as ct
from hightrig.constants import constants_for
from hightrig.real_trig import eval_real
from hightrig.verify import sample_complex

from oracles import S_COMPLEX, taylor_exact


@pytest.mark.parametrize("p", range(2, 9))
def test_taylor_matches_exact_rational_recurrence(p):
    a, b = taylor_exact(p, 24)
    ser = ct.taylor_coeffs(p, 24)
    for n in range(24):
        assert abs(ser.a[n] - float(a[n])) <= 2e-15 * abs(float(a[n]))
        assert abs(ser.b[n] - float(b[n])) <= 2e-15 * abs(float(b[n]))


def test_taylor_initial_and_classical():
    for p in range(2, 9):
        ser = ct.taylor_coeffs(p, 10)
        assert (ser.a[0], ser.a[1], ser.b[0], ser.b[1]) == (0.0, 1.0, 1.0, 0.0)
    ser = ct.taylor_coeffs(2, 8)
    assert ser.a[3] == pytest.approx(-1 / 6, rel=1e-15)
    assert ser.b[2] == pytest.approx(-0.5, rel=1e-15)
    assert ser.a[5] == pytest.approx(1 / 120, rel=1e-15)
    assert ser.N == 8
    with pytest.raises(ValueError):
        ct.taylor_coeffs(3, 1)


def test_a5_for_p4_against_finite_differences():
    # s^(5)(0) = 5! a_5, from a 6-point central stencil on real evaluations
    h = 0.05
    f = [eval_real(4, j * h).s for j in range(-3, 4)]
    d5 = (-f[0] + 4 * f[1] - 5 * f[2] + 0 * f[3] + 5 * f[4] - 4 * f[5] + f[6]) / (2 * h ** 5)
    assert abs(d5 / 120 - ct.taylor_coeffs(4, 8).a[5]) < 2e-3


@pytest.mark.parametrize("p", range(3, 9))
def test_sparsity_exact(p):
    ser = ct.taylor_coeffs(p, 60)
    assert all(v == 0.0 for n, v in enumerate(ser.a) if n % p != 1)
    assert all(v == 0.0 for n, v in enumerate(ser.b) if n % p != 0)
    assert all(v != 0.0 for n, v in enumerate(ser.a) if n % p == 1)


def test_eval_disc_basics():
    assert ct.eval_disc(4, 0) .s == 0 and ct.eval_disc(4, 0).c == 1
    for p in (3, 4, 5, 6):
        r = constants_for(p).picard_r
        d = ct.eval_disc(p, 0.5 * r)
        e = eval_real(p, 0.5 * r)
        assert abs(d.s - e.s) < 1e-11 and abs(d.c - e.c) < 1e-11
        assert ct.eval_disc(p, 0.95 * r).status == ct.REJECTED


def test_eval_disc_p4_imaginary_axis():
    r = constants_for(4).picard_r
    e = ct.eval_disc(4, 0.5j * r)
    assert abs(e.c.imag) < 1e-16
    assert abs(ct.eval_disc(4, -0.5j * r).c - e.c.conjugate()) < 1e-16


@pytest.mark.parametrize("p", [2, 3, 4, 5, 6, 7])
def test_march_to_K(p):
    e = ct.march(p, constants_for(p).K)
    v = 2 ** (-1 / p)
    assert abs(e.s - v) < 1e-10 and abs(e.c - v) < 1e-10


@pytest.mark.parametrize("p", [3, 4, 5])
def test_march_real_matches_real_engine(p):
    k = constants_for(p)
    for x in (0.3, 0.8 * k.K, 1.2 * k.K, 0.9 * k.A):
        e, r = ct.march(p, x), eval_real(p, x)
        assert abs(e.s - r.s) < 1e-10 and abs(e.c - r.c) < 1e-10


def test_march_p4_conj_and_complementarity():
    k = constants_for(4)
    z = k.K + 0.5j
    e = ct.march(4, z)
    assert abs(ct.march(4, z.conjugate()).s - e.s.conjugate()) < 1e-9
    assert abs(ct.eval_complex(4, 2 * k.K - z).c - e.s) < 1e-9


def test_march_step_floor_reports_rejection():
    k = constants_for(3)
    beta = cmath.exp(1j * math.pi / 3)
    e = ct.march(3, beta * k.L * 1.02)
    assert e.status in (ct.REJECTED, ct.FLAGGED) or not math.isfinite(abs(e.s))


@pytest.mark.parametrize("p,z,s_ref,c_ref", S_COMPLEX)
def test_frozen_complex_values(p, z, s_ref, c_ref):
    e = ct.eval_complex(p, z)
    assert e.ok
    assert abs(e.s - s_ref) < 1e-11 and abs(e.c - c_ref) < 1e-11


@pytest.mark.parametrize("p", [4, 6, 8])
def test_zero_of_c_at_2K_even(p):
    e = ct.eval_complex(p, 2 * constants_for(p).K)
    assert abs(e.c) < 1e-9
    assert abs(e.s ** p - 1) < 1e-9 and abs(abs(e.s) - 1) < 1e-9


@pytest.mark.parametrize("p", [3, 4, 5, 6, 8])
def test_real_axis_agrees_with_real_engine(p):
    k = constants_for(p)
    xs = [0.2, 1.0, 1.7, -0.5] + ([2.5, -3.0, 7.0] if p % 2 == 0 else [k.A + 0.2])
    for x in xs:
        e, r = ct.eval_complex(p, complex(x, 0.0)), eval_real(p, x)
        assert abs(e.s - r.s) < 1e-10 * max(1, abs(r.s)) and abs(e.c - r.c) < 1e-10 * max(1, abs(r.c))


@pytest.mark.parametrize("p", [2, 4, 6])
def test_period_8K(p):
    k = constants_for(p)
    for z in (0.3 + 0.1j, 1.7 - 0.2j):
        a, b = ct.eval_complex(p, z), ct.eval_complex(p, z + 8 * k.K)
        assert abs(a.s - b.s) < 1e-9 and abs(a.c - b.c) < 1e-9


def test_rejections_name_predicate():
    k4 = constants_for(4)
    e = ct.eval_complex(4, complex(0.1, 1.01 * k4.band_halfwidth))
    assert e.status == ct.REJECTED and "band" in e.info
    assert math.isnan(e.s.real)
    k3 = constants_for(3)
    e = ct.eval_complex(3, complex(-1.01 * k3.L, 0))
    assert e.status == ct.REJECTED and "p-gon" in e.info
    assert ct.eval_complex(3, complex(2 * k3.K + 0.99 * k3.L, 0)).ok
    assert not ct.eval_complex(3, complex(2 * k3.K + 1.01 * k3.L, 0)).ok
    assert ct.eval_complex(2, complex(3.0, 5.0)).ok
    assert not ct.eval_complex(4, complex(math.inf, 0)).ok


def test_t_complex_special_values():
    assert ct.t_complex(3, 0) == 0
    for p in (3, 4, 5, 6):
        k = constants_for(p)
        assert abs(ct.t_complex(p, k.K) - 1) < 1e-10
        assert ct.is_pole(ct.t_complex(p, 2 * k.K))


@pytest.mark.parametrize("p", [3, 4, 5, 6])
def test_vertex_limit_monotone(p):
    k = constants_for(p)
    beta = cmath.exp(1j * math.pi / p)
    r = [abs(ct.t_complex(p, f * beta * k.L) ** p + 1) for f in (0.9, 0.99, 0.999)]
    assert r[0] > r[1] > r[2] and r[2] < 1e-2
    assert abs(ct.t_complex(p, 0.999 * beta * k.L) - beta) < 0.1


def test_sc_from_t():
    e = ct.sc_from_t(4, 0)
    assert (e.s, e.c) == (0, 1)
    for p in (3, 4, 5, 6):
        k = constants_for(p)
        e = ct.sc_from_t(p, k.K)
        v = 2 ** (-1 / p)
        assert abs(e.s - v) < 1e-10 and abs(e.c - v) < 1e-10 and abs(e.t - 1) < 1e-10
    w = 0.3 + 0.2j
    a, b = ct.sc_from_t(5, w), ct.march(5, w)
    assert abs(a.s - b.s) < 1e-9 and abs(a.c - b.c) < 1e-9
    assert ct.sc_from_t(3, 2 * constants_for(3).K).status == ct.REJECTED


def test_polygon_geometry():
    g4 = ct.polygon_geometry(4)
    k4 = constants_for(4)
    expect = [cmath.exp(1j * math.pi * (2 * j + 1) / 4) * k4.L for j in range(4)]
    assert all(abs(v - w) < 1e-15 for v, w in zip(g4.vertices, expect))
    assert all(abs(abs(v) - k4.L) < 1e-15 for v in g4.vertices)
    assert all(abs(abs(m) - k4.K) < 1e-15 for m in g4.edge_midpoints)
    g3 = ct.polygon_geometry(3)
    k3 = constants_for(3)
    xs = [v.real for v in g3.doubled_outline]
    assert abs(min(xs) + k3.L) < 1e-14 and abs(max(xs) - (2 * k3.K + k3.L)) < 1e-14
    for p in range(3, 9):
        assert abs(ct.polygon_geometry(p).edge_midpoints[0] - constants_for(p).K) < 1e-15
    assert g3.on_shared_edge(complex(k3.K, 0.5 * k3.band_halfwidth))
    with pytest.raises(ValueError):
        ct.polygon_geometry(2)


_pts = st.sampled_from([3, 4, 5, 6])


@given(p=_pts, seed=st.integers(0, 10 ** 6))
@settings(max_examples=40, deadline=None)
def test_pythagorean_property(p, seed):
    z = sample_complex(p, 1, random.Random(seed))[0]
    e = ct.eval_complex(p, z)
    assert e.ok and e.pythagorean_residual() < 1e-9


@given(p=_pts, seed=st.integers(0, 10 ** 6))
@settings(max_examples=30, deadline=None)
def test_conjugation_and_complementarity_property(p, seed):
    k = constants_for(p)
    z = sample_complex(p, 1, random.Random(seed))[0]
    e = ct.eval_complex(p, z)
    assert abs(ct.eval_complex(p, z.conjugate()).s - e.s.conjugate()) < 1e-9
    assert abs(ct.eval_complex(p, 2 * k.K - z).c - e.s) < 1e-9


def test_odd_complementarity_on_doubled_polygon():
    k = constants_for(5)
    for z in (0.4 + 0.3j, 1.6 + 0.2j, k.K + 0.5j):
        a, b = ct.eval_complex(5, z), ct.eval_complex(5, 2 * k.K - z)
        assert abs(b.c - a.s) < 1e-9 and abs(b.s - a.c) < 1e-9


@pytest.mark.parametrize("p", [4, 6])
def test_unit_modulus_on_shared_segment(p):
    k = constants_for(p)
    for y in (-0.8, -0.3, 0.2, 0.7):
        assert abs(abs(ct.t_complex(p, k.K + 1j * y * k.band_halfwidth)) - 1) < 1e-6


def test_flagged_status_is_distinct():
    assert ct.FLAGGED not in (ct.OK, ct.REJECTED)

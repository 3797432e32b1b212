"""Invariant suite behind ``hightrig verify``.

Each check measures a residual and compares it with a threshold.  Checks
built on complex evaluation use the caller's ``tol``; the rest carry fixed
thresholds.  Sampling is seeded, so two runs print identical reports.
"""
import cmath
import math
import random
from dataclasses import dataclass

from . import complex_trig as ct
from . import quadrature as q
from . import real_trig as rt
from .constants import constants_for, pparam
from .hyp2f1 import gauss_2f1, sigma_hyp, tau_hyp

__all__ = ["CheckResult", "run_checks", "CHECK_NAMES", "sample_complex", "blowup_asymptote"]

SEED = 20240601


@dataclass(frozen=True)
class CheckResult:
    name: str
    p: int
    residual: float
    threshold: float
    note: str = ""

    @property
    def passed(self):
        return self.residual <= self.threshold

    def line(self):
        mark = "PASS" if self.passed else "FAIL"
        tail = f"  ({self.note})" if self.note else ""
        return f"{mark}  p={self.p:<3d} {self.name:<28s} residual={self.residual:.3e}  threshold={self.threshold:.1e}{tail}"


def blowup_asymptote(p, d):
    """Leading magnitude of ``s`` at distance ``d`` from an odd-``p`` blow-up point."""
    return ((p - 2) * d) ** (-1.0 / (p - 2))


def _mx(values):
    m = 0.0
    for v in values:
        if not math.isfinite(v):
            return math.inf
        m = max(m, v)
    return m


def sample_complex(p, n, rng, shrink=0.9):
    """``n`` reproducible points well inside the guaranteed complex domain."""
    k = constants_for(p)
    pts = []
    if p == 2:
        while len(pts) < n:
            pts.append(complex(rng.uniform(-8.0, 8.0), rng.uniform(-2.0, 2.0)))
        return pts
    geom = ct.polygon_geometry(p)
    if p % 2 == 0:
        while len(pts) < n:
            pts.append(complex(rng.uniform(-4 * k.K, 4 * k.K),
                               rng.uniform(-shrink, shrink) * k.band_halfwidth))
        return pts
    while len(pts) < n:
        z = complex(rng.uniform(-k.L, k.L), rng.uniform(-k.L, k.L))
        if not geom.in_polygon(z / shrink):
            continue
        if rng.random() < 0.5:
            z = 2.0 * k.K - z.conjugate()
        pts.append(z)
    return pts


def _disc_points(p, n, rng, frac=0.85):
    r = constants_for(p).picard_r
    return [frac * r * math.sqrt(rng.random()) * cmath.exp(2j * math.pi * rng.random())
            for _ in range(n)]


# --- constants --------------------------------------------------------------

def _constants_checks(p, tol):
    k = constants_for(p)
    out = [CheckResult("A_gamma_vs_quadrature", p, abs(k.A - q.a_integral(p)), 1e-11)]
    if p == 2:
        out.append(CheckResult("A2_equals_half_pi", p, abs(k.A - math.pi / 2), 1e-13))
        out.append(CheckResult("B2_infinite", p, 0.0 if math.isinf(k.B) else 1.0, 0.0))
        return out
    res = k.identity_residuals()
    out += [
        CheckResult("A_over_B_minus_2cos", p, abs(res["ratio"]), 1e-12),
        CheckResult("A_minus_2K", p, abs(res["a_minus_2k"]) / k.A, 1e-12),
        CheckResult("L_minus_B", p, abs(res["l_minus_b"]) / k.B, 1e-12),
        CheckResult("B_gamma_vs_quadrature", p, abs(k.B - q.b_integral(p)) / k.B, 1e-11),
    ]
    return out


# --- quadrature / series ----------------------------------------------------

def _oracle_checks(p, tol, rng):
    sig, tau = [], []
    rad = 0.9 ** (1.0 / p)
    for _ in range(40):
        w = rad * math.sqrt(rng.random()) * cmath.exp(2j * math.pi * rng.random())
        sig.append(abs(q.sigma_complex(p, w) - sigma_hyp(p, w)))
        tau.append(abs(q.tau_quad(p, w) - tau_hyp(p, w)))
    out = [CheckResult("sigma_quad_vs_hyp", p, _mx(sig), 1e-11),
           CheckResult("tau_quad_vs_hyp", p, _mx(tau), 1e-11)]
    if p == 2:
        zs = [rng.uniform(-0.9, 0.9) for _ in range(20)]
        err = _mx(abs(x * gauss_2f1(0.5, 0.5, 1.5, x * x) - math.asin(x)) for x in zs)
        out.append(CheckResult("2F1_arcsin", p, err, 1e-13))
    return out


# --- real line --------------------------------------------------------------

def _real_checks(p, tol, rng):
    k = constants_for(p)
    out = []
    sK = rt.eval_real(p, k.K)
    target = 2.0 ** (-1.0 / p)
    out.append(CheckResult("s_c_at_K", p, max(abs(sK.s - target), abs(sK.c - target)), 1e-10))
    eA = rt.eval_real(p, k.A)
    out.append(CheckResult("s_c_at_A", p, max(abs(eA.s - 1.0), abs(eA.c)), 1e-12))
    if p == 2:
        xs = [2 * math.pi * j / 999 for j in range(1000)]
        err = _mx(max(abs(e.s - math.sin(e.x)), abs(e.c - math.cos(e.x)))
                  for e in (rt.eval_real(2, x) for x in xs))
        out.append(CheckResult("sine_cosine_reduction", p, err, 1e-10))
    if p % 2 == 0:
        per = k.real_period
        xs = [rng.uniform(0.0, per) for _ in range(200)]
        out.append(CheckResult("real_pythagorean", p, _mx(
            abs(e.s ** p + e.c ** p - 1.0) for e in (rt.eval_real(p, x) for x in xs)), 1e-10))
        out.append(CheckResult("real_period_4A", p, _mx(
            abs(rt.eval_real(p, x + per).s - rt.eval_real(p, x).s) for x in xs[:100]), 1e-10))
        out.append(CheckResult("real_half_period", p, _mx(
            abs(rt.eval_real(p, x + 2 * k.A).s + rt.eval_real(p, x).s) for x in xs[:50]), 1e-10))
        out.append(CheckResult("real_parity", p, _mx(
            abs(rt.eval_real(p, -x).s + rt.eval_real(p, x).s) for x in xs[:50]), 1e-12))
        return out
    lo, hi = -k.B, k.A + k.B
    xs = [rng.uniform(lo, hi) for _ in range(200)]
    out.append(CheckResult("real_pythagorean_rel", p, _mx(
        rt.eval_real(p, x).pythagorean_residual() for x in xs), 1e-10,
        "relative to max(1,|s|^p,|c|^p)"))
    mid = [x for x in xs if -0.5 * k.B < x < k.A + 0.5 * k.B]
    out.append(CheckResult("real_pythagorean_abs_mid", p, _mx(
        abs(e.s ** p + e.c ** p - 1.0) for e in (rt.eval_real(p, x) for x in mid)), 1e-10))
    out.append(CheckResult("real_complementarity", p, _mx(
        abs(rt.eval_real(p, k.A - x).c - rt.eval_real(p, x).s) for x in mid[:50]), 1e-12))
    # blow-up: growth follows ((p-2) d)^(-1/(p-2)) at both ends
    errs = []
    for j in range(2, 7):
        d = 10.0 ** (-j)
        amp = blowup_asymptote(p, d)
        left, right = rt.eval_real(p, lo + d), rt.eval_real(p, hi - d)
        errs += [abs(-left.s / amp - 1.0), abs(left.c / amp - 1.0),
                 abs(right.s / amp - 1.0), abs(-right.c / amp - 1.0)]
    out.append(CheckResult("blowup_asymptote", p, _mx(errs), 2e-2,
                           "leading-order law, relative"))
    bad = sum(rt.eval_real(p, x).status != rt.OUT_OF_DOMAIN
              for x in (lo, hi, lo - 1e-6, hi + 1e-6, lo - 1.0, hi + 1.0))
    out.append(CheckResult("reject_outside_interval", p, float(bad), 0.0))
    return out


# --- complex plane ----------------------------------------------------------

def _complex_checks(p, tol, rng):
    k = constants_for(p)
    ev = ct.eval_complex
    out = []
    pts = sample_complex(p, 200, rng)
    evs = [ev(p, z) for z in pts]
    notok = sum(not e.ok for e in evs)
    out.append(CheckResult("complex_in_domain_ok", p, float(notok), 0.0))
    out.append(CheckResult("complex_pythagorean", p, _mx(
        e.pythagorean_residual() for e in evs), tol))
    sub = pts[:60]
    out.append(CheckResult("conjugation", p, _mx(
        abs(ev(p, z.conjugate()).s - ev(p, z).s.conjugate()) for z in sub), tol))
    out.append(CheckResult("complementarity", p, _mx(
        abs(ev(p, 2 * k.K - z).c - ev(p, z).s) for z in sub), tol))
    disc = _disc_points(p, 40, rng)
    alpha = cmath.exp(2j * math.pi / p)
    rot = 0.0
    for z in disc:
        a, b = ev(p, z), ev(p, alpha * z)
        rot = max(rot, abs(b.s - alpha * a.s), abs(b.c - a.c))
    out.append(CheckResult("rotation_alpha", p, rot, min(tol, 1e-10)))
    if p % 2 == 0:
        par = 0.0
        for z in sub:
            a, b = ev(p, z), ev(p, -z)
            par = max(par, abs(b.s + a.s), abs(b.c - a.c))
        out.append(CheckResult("parity", p, par, tol))
        per = 0.0
        for z in sub[:30]:
            a, b = ev(p, z), ev(p, z + 8 * k.K)
            per = max(per, abs(b.s - a.s), abs(b.c - a.c))
        out.append(CheckResult("period_8K", p, per, tol))
        tper = []
        for z in sub[:30]:
            a, b = ev(p, z), ev(p, z + 4 * k.K)
            if abs(a.c) > 0.1:
                tper.append(abs(b.t - a.t))
        out.append(CheckResult("t_period_4K", p, _mx(tper), max(tol, 1e-8)))
        zs = max(max(abs(ev(p, 4 * n * k.K).s), abs(ev(p, (4 * n + 2) * k.K).c))
                 for n in range(-2, 3))
        out.append(CheckResult("zero_sets", p, zs, tol))
        if p > 2:
            mods = [abs(abs(ct.t_complex(p, k.K + 1j * y * k.band_halfwidth)) - 1.0)
                    for y in (-0.9, -0.5, 0.1, 0.5, 0.9)]
            out.append(CheckResult("unit_modulus_edge", p, _mx(mods), 1e-6))
    else:
        beta = cmath.exp(1j * math.pi / p)
        bs = 0.0
        for z in disc:
            a, b = ev(p, z), ev(p, -beta * z)
            bs = max(bs, abs(b.s + beta * a.s), abs(b.c - a.c))
        out.append(CheckResult("beta_symmetry", p, bs, min(tol, 1e-10)))
    refl = []
    for z in sub:
        a, b = ev(p, z), ev(p, 2 * k.K - z)
        if abs(a.c) > 0.1 and abs(a.s) > 0.1:
            refl.append(abs(a.t * b.t - 1.0))
    out.append(CheckResult("t_reflection", p, _mx(refl), tol))
    sp = ev(p, k.K)
    t2 = 2.0 ** (-1.0 / p)
    out.append(CheckResult("complex_s_c_at_K", p, max(abs(sp.s - t2), abs(sp.c - t2)), 1e-10))
    out.append(CheckResult("c_zero_at_2K", p, abs(ev(p, 2 * k.K).c), tol))
    if p > 2:
        beta = cmath.exp(1j * math.pi / p)
        vert = abs(ct.t_complex(p, 0.999 * beta * k.L) ** p + 1.0)
        out.append(CheckResult("vertex_limit", p, vert, 1e-2))
    out.append(_ode_check(p, rng))
    out.append(_engine_check(p, rng))
    return out


def _ode_points(p, n, rng):
    """Points with ``|c| > 0.1`` in a shrunken polygon (or band), for difference quotients."""
    k = constants_for(p)
    pts = []
    while len(pts) < n:
        if p == 2:
            z = complex(rng.uniform(-1.2, 1.2), rng.uniform(-1.0, 1.0))
        else:
            z = complex(rng.uniform(-k.L, k.L), rng.uniform(-k.L, k.L))
            if not ct.polygon_geometry(p).in_polygon(z / 0.8):
                continue
        e = ct.eval_complex(p, z)
        if e.ok and abs(e.c) > 0.1:
            pts.append(z)
    return pts


def _ode_check(p, rng, h=1e-5):
    worst = 0.0
    for z in _ode_points(p, 50, rng):
        tp = (ct.t_complex(p, z + h) - ct.t_complex(p, z - h)) / (2 * h)
        e = ct.eval_complex(p, z)
        worst = max(worst, abs(tp ** p - (1 + e.t ** p) ** 2), abs(tp - 1 / e.c ** 2) * 10.0)
    return CheckResult("quotient_ode_fd", p, worst, 1e-4, "max of (t')^p residual and 10*|t' - c^-2|")


def _engine_check(p, rng):
    worst = 0.0
    for z in _disc_points(p, 50, rng):
        a = ct.eval_disc(p, z)
        b = ct.march(p, z)
        if p == 2:
            worst = max(worst, abs(a.s - b.s), abs(a.c - b.c))
            continue
        c = ct.sc_from_t(p, z)
        worst = max(worst, abs(a.s - b.s), abs(a.c - b.c), abs(a.s - c.s), abs(a.c - c.c),
                    abs(b.s - c.s), abs(b.c - c.c))
    return CheckResult("engine_agreement", p, worst, 1e-9)


def _sparsity_check(p):
    ser = ct.taylor_coeffs(p, 60)
    bad = sum(1 for n in range(60) if n % p != 1 and ser.a[n] != 0.0)
    bad += sum(1 for n in range(60) if n % p != 0 and ser.b[n] != 0.0)
    head = abs(ser.a[0]) + abs(ser.a[1] - 1) + abs(ser.b[0] - 1) + abs(ser.b[1])
    return CheckResult("taylor_sparsity", p, float(bad) + head, 0.0)


CHECK_NAMES = ("constants", "oracles", "real", "complex", "series")


def run_checks(p, tol=1e-9, seed=SEED):
    """Run every invariant check for ``p``; returns a list of :class:`CheckResult`."""
    p = pparam(p).p
    rng = random.Random(seed + p)
    out = []
    out += _constants_checks(p, tol)
    out += _oracle_checks(p, tol, rng)
    out += _real_checks(p, tol, rng)
    out += _complex_checks(p, tol, rng)
    out.append(_sparsity_check(p))
    return out

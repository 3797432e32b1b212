"""Evaluation of ``s``, ``c`` and ``t`` in the complex plane.

Three engines, usable on their own or cross-checked against each other:

* ``eval_disc`` sums the Taylor series at 0 inside ``0.9 r`` (``r`` the
  Picard radius);
* ``march`` integrates the system along straight legs with an embedded
  Runge-Kutta 5(4) pair, seeded from the series at ``0.5 r``;
* ``sc_from_t`` inverts the Schwarz-Christoffel map ``tau`` for ``t`` and
  sets ``c = (1 + t^p)^(-1/p)``, ``s = t c``.

``eval_complex`` polices the guaranteed domains: for even ``p`` the straight
band ``|Im z| < K tan(pi/p)``, reduced by the shift rules
``s(z + 2K) = c(z)``, ``c(z + 2K) = -s(z)``; for odd ``p`` the doubled
``p``-gon, with conjugation used to put ``Im z >= 0`` and a two-leg path
through ``K`` for points beyond the first polygon.
"""
import cmath
import functools
import math
from dataclasses import dataclass, field

from . import quadrature as _q
from ._backend import kernels
from .constants import constants_for, pparam
from .hyp2f1 import tau_hyp

__all__ = [
    "SeriesPair", "ComplexDomainSpec", "ComplexEval",
    "taylor_coeffs", "eval_disc", "march", "eval_complex", "t_complex",
    "sc_from_t", "polygon_geometry", "is_pole",
]

OK = "ok"
REJECTED = "rejected_outside_domain"
FLAGGED = "flagged"

DISC_TRUST = 0.9
SEED_FRACTION = 0.5
MARCH_TOL = 1e-12
STEP_FLOOR = 1e-10
DRIFT_LIMIT = 1e-9
POLE_TOL = 1e-9
SERIES_TERMS = 400

POLE = math.inf


def is_pole(t):
    """True if ``t`` is the pole marker returned by :func:`t_complex`."""
    return isinstance(t, float) and math.isinf(t)


@dataclass(frozen=True)
class SeriesPair:
    """Taylor coefficients ``a_n`` of ``s`` and ``b_n`` of ``c`` at 0, ``n < N``."""

    p: int
    a: tuple
    b: tuple

    @property
    def N(self):
        return len(self.a)


@functools.lru_cache(maxsize=None)
def _coeffs_cached(p, n):
    a, b = kernels.taylor_recurrence(p, n)
    return SeriesPair(p, tuple(a), tuple(b))


def taylor_coeffs(p, N):
    """Taylor coefficients of ``(s, c)`` at the origin up to index ``N - 1``.

    The coefficients satisfy ``(n+1) a_{n+1} = [c^(p-1)]_n`` and
    ``(n+1) b_{n+1} = -[s^(p-1)]_n``; only ``a_n`` with ``n = 1 mod p`` and
    ``b_n`` with ``n = 0 mod p`` are non-zero, exactly.
    """
    p = pparam(p).p
    if N < 2:
        raise ValueError("N must be >= 2")
    return _coeffs_cached(p, int(N))


@dataclass(frozen=True)
class ComplexEval:
    z: complex
    s: complex
    c: complex
    status: str
    p: int = 0
    info: str = ""

    @property
    def ok(self):
        return self.status == OK

    @property
    def t(self):
        if not self.ok and self.status != FLAGGED:
            return complex(math.nan, math.nan)
        if abs(self.c) < POLE_TOL * max(1.0, abs(self.s)):
            return POLE
        return self.s / self.c

    def pythagorean_residual(self):
        return abs(self.s ** self.p + self.c ** self.p - 1.0)


def _rejected(p, z, why):
    nan = complex(math.nan, math.nan)
    return ComplexEval(z, nan, nan, REJECTED, p, why)


@dataclass(frozen=True)
class ComplexDomainSpec:
    """Regular ``p``-gon ``P`` (inradius ``K``, circumradius ``L``) and its doubling.

    ``P+`` is the reflection of ``P`` across its right edge ``Re z = K``;
    the doubled polygon is ``P``, ``P+`` and the open edge between them.
    """

    p: int
    K: float
    L: float
    picard_r: float
    band_halfwidth: float
    vertices: tuple
    doubled_outline: tuple = field(repr=False)

    @property
    def edge_midpoints(self):
        return tuple(cmath.exp(2j * math.pi * m / self.p) * self.K for m in range(self.p))

    def in_polygon(self, z):
        z = complex(z)
        for m in range(self.p):
            n = cmath.exp(-2j * math.pi * m / self.p)
            if (z * n).real >= self.K:
                return False
        return True

    def in_polygon_plus(self, z):
        z = complex(z)
        return self.in_polygon(2.0 * self.K - z.conjugate())

    def on_shared_edge(self, z):
        z = complex(z)
        return abs(z.real - self.K) <= 4e-16 * self.K and abs(z.imag) < self.band_halfwidth

    def in_doubled(self, z):
        return self.in_polygon(z) or self.in_polygon_plus(z) or self.on_shared_edge(z)

    def in_band(self, z):
        return abs(complex(z).imag) < self.band_halfwidth


@functools.lru_cache(maxsize=None)
def _geometry(p):
    k = constants_for(p)
    beta = cmath.exp(1j * math.pi / p)
    verts = tuple(beta ** (2 * j + 1) * k.L for j in range(p))
    plus = tuple(2.0 * k.K - v.conjugate() for v in verts)
    outline = verts + tuple(reversed(plus[1:-1]))
    return ComplexDomainSpec(p, k.K, k.L, k.picard_r, k.band_halfwidth, verts, outline)


def polygon_geometry(p):
    """Vertices ``beta^(2k+1) L`` of the ``p``-gon plus the doubled-polygon outline."""
    pp = pparam(p)
    if pp.p < 3:
        raise ValueError("polygon geometry needs p >= 3")
    return _geometry(pp.p)


def _wpow(z, p):
    return complex(z.real ** p, 0.0) if z.imag == 0.0 else z ** p


def _series_sum(coefs, zeta):
    """Sum ``sum_j coefs[j] zeta^j`` with an empirical geometric tail bound."""
    total = 0j
    power = 1 + 0j
    prev = None
    ratios = []
    for j, a in enumerate(coefs):
        term = a * power
        total += term
        mag = abs(term)
        if prev is not None and prev > 0.0:
            ratios.append(mag / prev)
        prev = mag
        power *= zeta
        if j >= 3 and ratios:
            rho = max(ratios[-3:])
            if rho < 1.0:
                tail = mag * rho / (1.0 - rho)
                if tail < 1e-16 * max(1.0, abs(total)):
                    return total, tail
        if mag == 0.0 and zeta == 0:
            return total, 0.0
    return total, math.inf


def eval_disc(p, z):
    """Taylor series at 0, trusted for ``|z| < 0.9 r``."""
    pp = pparam(p)
    k = constants_for(pp)
    z = complex(z)
    if not abs(z) < DISC_TRUST * k.picard_r:
        return _rejected(pp.p, z, f"|z| >= {DISC_TRUST} * picard_r")
    if z == 0:
        return ComplexEval(z, 0j, 1 + 0j, OK, pp.p)
    ser = taylor_coeffs(pp.p, SERIES_TERMS)
    q = pp.p
    a = ser.a[1::q]
    b = ser.b[0::q]
    zeta = _wpow(z, q)
    ss, ts = _series_sum(a, zeta)
    cc, tc = _series_sum(b, zeta)
    s = z * ss
    tail = max(abs(z) * ts, tc)
    if not tail < 1e-13:
        return ComplexEval(z, s, cc, FLAGGED, pp.p, f"series tail bound {tail:.2e}")
    return ComplexEval(z, s, cc, OK, pp.p)


def march(p, z, waypoints=()):
    """Integrate along ``0 -> waypoints... -> z`` from a series seed at ``0.5 r``.

    The caller must ensure every leg lies in a domain of holomorphy.  The
    result is ``flagged`` if the relative Pythagorean drift exceeds 1e-9 and
    ``rejected_outside_domain`` if the step size falls below the floor.
    """
    pp = pparam(p)
    k = constants_for(pp)
    z = complex(z)
    targets = [complex(w) for w in waypoints] + [z]
    first = next((w for w in targets if w != 0), None)
    if first is None:
        return eval_disc(pp.p, 0j)
    seed_z = SEED_FRACTION * k.picard_r * first / abs(first)
    seed = eval_disc(pp.p, seed_z)
    s, c = seed.s, seed.c
    here = seed_z
    drift = 0.0
    steps = 0
    for target in targets:
        dz = target - here
        if dz == 0:
            continue
        sr, si, cr, ci, nacc, _nrej, mdrift, ok = kernels.dp54_march(
            pp.p, s.real, s.imag, c.real, c.imag, dz.real, dz.imag,
            MARCH_TOL, STEP_FLOOR, 0.01)
        steps += nacc
        if not ok:
            return _rejected(pp.p, z, f"step size fell below {STEP_FLOOR:g} on leg to {target}")
        s, c = complex(sr, si), complex(cr, ci)
        drift = max(drift, mdrift)
        here = target
    if drift > DRIFT_LIMIT:
        return ComplexEval(z, s, c, FLAGGED, pp.p, f"pythagorean drift {drift:.2e}")
    return ComplexEval(z, s, c, OK, pp.p, f"{steps} steps")


def _quarter_shift(s, c, n):
    # (s, c)(z + 2K) = (c, -s)(z)
    for _ in range(n % 4):
        s, c = c, -s
    return s, c


def eval_complex(p, z):
    """Evaluate ``(s, c)`` at ``z`` inside the guaranteed domain, else reject."""
    pp = pparam(p)
    k = constants_for(pp)
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        return _rejected(pp.p, z, "non-finite argument")
    if pp.even:
        if not abs(z.imag) < k.band_halfwidth:
            return _rejected(pp.p, z, f"|Im z| >= band half-width {k.band_halfwidth:.17g}")
        n = round(z.real / (2.0 * k.K))
        zr = z - 2.0 * k.K * n
        ev = _near_origin(pp.p, k, zr) or march(pp.p, zr)
        if ev.status == REJECTED:
            return _rejected(pp.p, z, ev.info)
        s, c = _quarter_shift(ev.s, ev.c, n)
        return ComplexEval(z, s, c, ev.status, pp.p, ev.info)
    geom = _geometry(pp.p)
    if not geom.in_doubled(z):
        return _rejected(pp.p, z, "outside the doubled open p-gon")
    flip = z.imag < 0
    w = z.conjugate() if flip else z
    ev = _near_origin(pp.p, k, w)
    if ev is None:
        ev = march(pp.p, w) if geom.in_polygon(w) else march(pp.p, w, waypoints=(k.K,))
    if ev.status == REJECTED:
        return _rejected(pp.p, z, ev.info)
    s, c = (ev.s.conjugate(), ev.c.conjugate()) if flip else (ev.s, ev.c)
    return ComplexEval(z, s, c, ev.status, pp.p, ev.info)


def _near_origin(p, k, z):
    if abs(z) < SEED_FRACTION * k.picard_r:
        return eval_disc(p, z)
    return None


def t_complex(p, z):
    """``s/c`` at ``z``; returns :data:`POLE` (``inf``) where ``c`` vanishes,
    NaN outside the domain."""
    return eval_complex(p, z).t


def _tau(p, t):
    if abs(t) ** p <= 0.9:
        return tau_hyp(p, t)
    return _q.tau_quad(p, t)


def _tau_prime_inv(p, t):
    # 1 / tau'(t) = (1 + t^p)^(2/p), principal power; Re(1 + t^p) > 0 in the disc
    return (1.0 + t ** p) ** (2.0 / p)


def sc_from_t(p, w):
    """Solve ``tau(t) = w`` for ``t`` and build ``c = (1 + t^p)^(-1/p)``, ``s = t c``.

    ``w`` must lie in the ``p``-gon; edge points are accepted, vertices are not.  Newton's method is continued along
    the ray from 0 to ``w``; the principal ``p``-th root is the branch with
    ``c(0) = 1`` because ``1 + t^p`` stays in the right half-plane.
    """
    pp = pparam(p)
    w = complex(w)
    q = pp.p
    # edge points (not vertices) are admitted: shrink by a hair before testing
    if q > 2 and not _geometry(q).in_polygon(w * (1.0 - 1e-12)):
        return _rejected(q, w, "outside the p-gon")
    if w == 0:
        return ComplexEval(w, 0j, 1 + 0j, OK, q)
    nsteps = max(2, math.ceil(abs(w) / 0.1))
    t = 0j
    prev = 0j
    for j in range(1, nsteps + 1):
        target = w * j / nsteps
        final = j == nsteps
        t = t + (target - prev) * _tau_prime_inv(q, t)
        prev = target
        tol = 1e-15 * (1.0 + abs(w)) if final else 1e-8
        for _ in range(60):
            if abs(t) > 1.0:
                t = t / abs(t)
            resid = _tau(q, t) - target
            step = resid * _tau_prime_inv(q, t)
            t -= step
            if abs(resid) <= tol or abs(step) <= 1e-16 * abs(t):
                break
        else:
            return _rejected(q, w, "Newton inversion of tau did not converge")
    c = (1.0 + t ** q) ** (-1.0 / q)
    return ComplexEval(w, t * c, c, OK, q)

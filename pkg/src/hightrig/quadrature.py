"""Double-exponential quadrature for the defining integrals.

All integrals here have at worst an algebraic singularity at one endpoint
(exponents ``-1 + 1/p`` and ``-2/p``) or an infinite endpoint.  Finite
intervals use the tanh-sinh map, ``[a, inf)`` uses the exp-sinh map.  The
step is halved level by level, reusing previous nodes, until two successive
levels agree to the requested tolerance; the last difference is reported as
the error estimate.

Near a singular endpoint the integrand must not be formed from ``1 - xi**p``
with ``xi`` rounded to 1.  The kernels receive the distance to the endpoint
directly, and :func:`integrate_de` can pass it to user integrands
(``complement=True``).
"""
import cmath
import functools
import math
from dataclasses import dataclass
from typing import NamedTuple

from ._backend import kernels
from ._pykernels import _ts_node
from .constants import pparam

__all__ = [
    "QuadResult", "QuadratureError", "IntegralSpec", "integrate_de",
    "sigma0", "sigma_odd", "sigma", "sigma_complex", "gamma_plus", "tau_quad",
    "a_integral", "b_integral", "k_integral", "l_integral", "evaluate",
]

UMAX = 6.0
UMAX_INF = 4.5  # exp-sinh: x spans roughly e^-70 .. e^70
H0 = 0.5
MAX_LEVEL = 12
DEFAULT_TOL = 1e-13


class QuadResult(NamedTuple):
    value: "float | complex"
    error: float
    level: int


class QuadratureError(ArithmeticError):
    """Raised when the level cap is reached before convergence."""

    def __init__(self, message, value, error):
        super().__init__(f"{message} (value={value!r}, error estimate={error:.3e})")
        self.value = value
        self.error = error


def _drive(level_sum, tol, max_level, what, umax=UMAX):
    """Refine ``h = H0 / 2**j``; ``level_sum(h, k0, kstep, kmax)`` returns a node sum."""
    h = H0
    total = level_sum(h, 0, 1, int(umax / h))
    value = h * total
    err = math.inf
    for level in range(1, max_level + 1):
        h *= 0.5
        total += level_sum(h, 1, 2, int(umax / h))
        new = h * total
        err = abs(new - value)
        value = new
        if err <= tol * (1.0 + abs(value)) and level >= 2:
            return QuadResult(value, err, level)
    raise QuadratureError(f"{what}: no convergence after {max_level} levels", value, err)


def integrate_de(f, a, b, *, tol=DEFAULT_TOL, complement=False, max_level=MAX_LEVEL):
    """Integrate ``f`` over ``[a, b]`` (``b`` may be ``math.inf``).

    With ``complement=True`` the integrand is called as ``f(x, x - a, b - x)``
    where both distances are computed without rounding ``x`` first; use this
    for integrands singular at an endpoint.  Returns a :class:`QuadResult`.
    """
    a = float(a)
    b = float(b)
    if b == a:
        return QuadResult(0.0, 0.0, 0)
    if math.isinf(a):
        raise ValueError("lower limit must be finite")
    if b < a:
        res = integrate_de(f, b, a, tol=tol, complement=complement, max_level=max_level)
        return QuadResult(-res.value, res.error, res.level)

    if math.isinf(b):
        half_pi = 0.5 * math.pi

        def level_sum(h, k0, kstep, kmax):
            acc = 0.0
            for k in range(k0, kmax + 1, kstep):
                for u in ((0.0,) if k == 0 else (k * h, -k * h)):
                    e = math.exp(half_pi * math.sinh(u))
                    wt = half_pi * math.cosh(u) * e
                    x = a + e
                    v = f(x, e, math.inf) if complement else f(x)
                    acc += wt * v
            return acc

        return _drive(level_sum, tol, max_level, "integrate_de", UMAX_INF)
    else:
        span = b - a

        def level_sum(h, k0, kstep, kmax):
            acc = 0.0
            for k in range(k0, kmax + 1, kstep):
                for u in ((0.0,) if k == 0 else (k * h, -k * h)):
                    t, d, wt = _ts_node(u)
                    if wt == 0.0:
                        continue
                    da = span * t
                    db = span * d
                    x = a + da if t < 0.5 else b - db
                    v = f(x, da, db) if complement else f(x)
                    acc += wt * v
            return acc * span

    return _drive(level_sum, tol, max_level, "integrate_de")


def _origin_integral(w, p, sgn, b, m, e0=None, tol=DEFAULT_TOL):
    """``int_0^w zeta^m (1 + sgn zeta^p)^b d zeta`` along the straight segment.

    Principal powers are used at every node; ``e0 = 1 + sgn w^p`` may be
    supplied exactly by the caller.
    """
    w = complex(w)
    if w == 0:
        return QuadResult(0.0, 0.0, 0)
    wp = _cpow_int(w, p)
    if e0 is None:
        e0 = 1.0 + sgn * wp
        if abs(e0) < 4.0 * 2.2e-16:
            e0 = 0j
    e0 = complex(e0)

    def level_sum(h, k0, kstep, kmax):
        re, im = kernels.ts_sum_origin(wp.real, wp.imag, e0.real, e0.imag, float(sgn),
                                       float(b), int(m), int(p), h, k0, kstep, kmax)
        return complex(re, im)

    res = _drive(level_sum, tol, MAX_LEVEL, "origin integral")
    pref = _cpow_int(w, m + 1)
    return QuadResult(pref * res.value, abs(pref) * res.error, res.level)


def _cpow_int(w, n):
    # polar form keeps w**p on the negative real axis for vertex directions
    if n == 0:
        return 1 + 0j
    if w.imag == 0.0:
        return complex(w.real ** n, 0.0)
    r, th = abs(w), cmath.phase(w)
    return cmath.rect(r ** n, n * th)


def _real_origin(x, p, sgn, b, m, tol=DEFAULT_TOL):
    x = float(x)
    if x == 0.0:
        return QuadResult(0.0, 0.0, 0)
    xp = x ** p
    if sgn < 0 and x > 0:
        e0 = -math.expm1(p * math.log(x))  # 1 - x^p without cancellation
    else:
        e0 = 1.0 + sgn * xp
    res = _origin_integral(x, p, sgn, b, m, e0=e0, tol=tol)
    return QuadResult(res.value.real, res.error, res.level)


def _to_one(x, p, b, tol=DEFAULT_TOL):
    """``int_x^1 (1 - xi^p)^b d xi`` for ``0 <= x < 1``."""
    span = 1.0 - x

    def level_sum(h, k0, kstep, kmax):
        return kernels.ts_sum_to_one(x, int(p), float(b), h, k0, kstep, kmax)

    res = _drive(level_sum, tol, MAX_LEVEL, "endpoint integral")
    return QuadResult(span * res.value, span * res.error, res.level)


@functools.lru_cache(maxsize=None)
def a_integral(p):
    """``int_0^1 (1 - xi^p)^(-1 + 1/p) d xi`` by quadrature."""
    p = pparam(p).p
    return _origin_integral(1.0, p, -1, -1.0 + 1.0 / p, 0, e0=0.0).value.real


@functools.lru_cache(maxsize=None)
def _b_pieces(p):
    head = _real_origin(1.0, p, +1, -1.0 + 1.0 / p, 0).value
    tail = _real_origin(1.0, p, +1, -1.0 + 1.0 / p, p - 3).value
    return head, tail


def b_integral(p):
    """``int_0^inf (1 + eta^p)^(-1 + 1/p) d eta``, split at 1.

    The tail is mapped by ``eta = 1/v`` to ``int_0^1 v^(p-3) (1 + v^p)^(-1 + 1/p) dv``.
    Divergent for ``p = 2``.
    """
    p = pparam(p).p
    if p == 2:
        return math.inf
    head, tail = _b_pieces(p)
    return head + tail


@functools.lru_cache(maxsize=None)
def k_integral(p):
    """``int_0^1 (1 + zeta^p)^(-2/p) d zeta`` by quadrature."""
    p = pparam(p).p
    return _real_origin(1.0, p, +1, -2.0 / p, 0).value


@functools.lru_cache(maxsize=None)
def l_integral(p):
    """``int_0^1 (1 - u^p)^(-2/p) du``; equals ``tau(beta) / beta``."""
    p = pparam(p).p
    if p == 2:
        return math.inf
    return _origin_integral(1.0, p, -1, -2.0 / p, 0, e0=0.0).value.real


def _sigma_core(p, x, full):
    # x <= 1; valid for both parities (for even p, |x| <= 1)
    b = -1.0 + 1.0 / p
    if x >= 0.0:
        if x ** p > 0.5:
            r = _to_one(x, p, b)
            res = QuadResult(a_integral(p) - r.value, r.error, r.level)
        else:
            res = _real_origin(x, p, -1, b, 0)
    elif p % 2 == 0:
        r = _sigma_core(p, -x, True)
        res = QuadResult(-r.value, r.error, r.level)
    elif x >= -1.0:
        res = _real_origin(x, p, -1, b, 0)
    else:
        # sigma(x) = -B + int_0^{1/|x|} v^(p-3) (1 + v^p)^b dv
        head, tail = _b_pieces(p)
        r = _real_origin(-1.0 / x, p, +1, b, p - 3)
        res = QuadResult(-(head + tail) + r.value, r.error, r.level)
    return res if full else res.value


def sigma0(p, x, *, full=False):
    """``int_0^x (1 - xi^p)^(-1 + 1/p) d xi`` for even ``p`` and ``-1 <= x <= 1``.

    Odd in ``x`` by construction.
    """
    pp = pparam(p)
    if not pp.even:
        raise ValueError("sigma0 is defined for even p; use sigma_odd for odd p")
    x = float(x)
    if not -1.0 <= x <= 1.0:
        raise ValueError(f"sigma0 requires -1 <= x <= 1, got {x}")
    return _sigma_core(pp.p, x, full)


def sigma_odd(p, x, *, full=False):
    """``int_0^x (1 - xi^p)^(-1 + 1/p) d xi`` for odd ``p`` and ``x <= 1``.

    Increases from ``-B_p`` (as ``x -> -inf``) to ``A_p`` at ``x = 1``.
    """
    pp = pparam(p)
    if pp.even:
        raise ValueError("sigma_odd requires odd p")
    x = float(x)
    if not x <= 1.0:
        raise ValueError(f"sigma_odd requires x <= 1, got {x}")
    if math.isinf(x):
        r = b_integral(pp.p)
        return QuadResult(-r, 0.0, 0) if full else -r
    return _sigma_core(pp.p, x, full)


def sigma(p, x, *, full=False):
    """Dispatch to :func:`sigma0` or :func:`sigma_odd` by parity."""
    pp = pparam(p)
    return sigma0(pp, x, full=full) if pp.even else sigma_odd(pp, x, full=full)


def gamma_plus(p, x, *, full=False):
    """``int_x^1 (1 - xi^p)^(-1 + 1/p) d xi``.

    Domain ``[-1, 1]`` for even ``p`` and ``(-inf, 1]`` for odd ``p``.
    """
    pp = pparam(p)
    x = float(x)
    if pp.even and not -1.0 <= x <= 1.0:
        raise ValueError(f"gamma_plus (even p) requires -1 <= x <= 1, got {x}")
    if not pp.even and not x <= 1.0:
        raise ValueError(f"gamma_plus (odd p) requires x <= 1, got {x}")
    if x == 1.0:
        res = QuadResult(0.0, 0.0, 0)
    elif x >= 0.0 and x ** pp.p > 0.5:
        res = _to_one(x, pp.p, -1.0 + 1.0 / pp.p)
    else:
        r = _sigma_core(pp.p, x, True)
        res = QuadResult(a_integral(pp.p) - r.value, r.error, r.level)
    return res if full else res.value


def tau_quad(p, w, *, full=False):
    """Schwarz-Christoffel map ``int_0^w (1 + zeta^p)^(-2/p) d zeta`` for ``|w| <= 1``.

    Integrated along the straight segment from 0 with principal powers.
    """
    pp = pparam(p)
    w = complex(w)
    if abs(w) > 1.0 + 1e-14:
        raise ValueError(f"tau_quad requires |w| <= 1, got |w| = {abs(w)}")
    res = _origin_integral(w, pp.p, +1, -2.0 / pp.p, 0)
    return res if full else res.value


def sigma_complex(p, w, *, full=False):
    """``int_0^w (1 - zeta^p)^(-1 + 1/p) d zeta`` along the segment, ``|w| <= 1``.

    Inside the unit disc ``1 - zeta^p`` has positive real part, so the
    principal power is the continuous branch with value 1 at the origin.
    """
    pp = pparam(p)
    w = complex(w)
    if abs(w) > 1.0 + 1e-14:
        raise ValueError(f"sigma_complex requires |w| <= 1, got |w| = {abs(w)}")
    res = _origin_integral(w, pp.p, -1, -1.0 + 1.0 / pp.p, 0)
    return res if full else res.value


KINDS = ("sigma0", "sigma_odd", "gamma_plus", "tau",
         "A_integral", "B_integral", "K_integral", "L_integral")


@dataclass(frozen=True)
class IntegralSpec:
    """One named integral: its kind, ``p`` and variable endpoint."""

    kind: str
    p: int
    endpoint: "float | complex | None" = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown integral kind {self.kind!r}")


def evaluate(spec):
    """Evaluate an :class:`IntegralSpec`."""
    k, p, x = spec.kind, spec.p, spec.endpoint
    if k == "sigma0":
        return sigma0(p, x)
    if k == "sigma_odd":
        return sigma_odd(p, x)
    if k == "gamma_plus":
        return gamma_plus(p, x)
    if k == "tau":
        return tau_quad(p, x)
    return {"A_integral": a_integral, "B_integral": b_integral,
            "K_integral": k_integral, "L_integral": l_integral}[k](p)

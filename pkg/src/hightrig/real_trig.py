"""Evaluation of ``s``, ``c`` and ``t = s/c`` on the real line.

Everything reduces to inverting ``sigma(x) = int_0^x (1 - xi^p)^(-1 + 1/p) d xi``
on a core interval where the inversion is well conditioned:

* even ``p``: ``u in [0, K]``, where ``s(u) <= 2^(-1/p)``;
* odd ``p``: ``u in (-B, K]``; below ``sigma(-1)`` the variable ``w = -1/s``
  is solved for instead, from the tail integral, so the approach to the
  blow-up at ``-B`` stays accurate.

Arguments in ``[K, A]`` (and, for odd ``p``, ``[K, A + B)``) use the
complementarity ``s(x) = c(A - x)``, ``c(x) = s(A - x)``.  For even ``p``
the reduction order is: translate by the period ``4A``, then the half
period ``s(x + 2A) = -s(x)``, ``c(x + 2A) = -c(x)``, then parity, then
complementarity.  ``c`` is always recovered as ``(1 - s^p)^(1/p)`` on the
core interval where it is non-negative; signs come from the bookkeeping.
"""
import functools
import math
from dataclasses import dataclass

from . import quadrature as _q
from .constants import constants_for, pparam
from .hyp2f1 import sigma_hyp

__all__ = [
    "RealDomain", "RealEval", "InversionError",
    "real_domain", "invert_sigma", "eval_real", "t_real",
]

NEWTON_TOL = 1e-13
NEWTON_MAXIT = 60

OK = "ok"
AT_POLE = "at_pole_of_t"
OUT_OF_DOMAIN = "out_of_domain"


class InversionError(ArithmeticError):
    pass


@dataclass(frozen=True)
class RealDomain:
    kind: str
    lower: float
    upper: float
    period: "float | None"

    def contains(self, x):
        return self.kind == "whole_line_periodic" or self.lower < x < self.upper


@dataclass(frozen=True)
class RealEval:
    """``(s, c, t)`` at ``x``; ``t`` is a signed infinity where ``c = 0``."""

    x: float
    s: float
    c: float
    t: float
    status: str
    p: int = 0

    @property
    def ok(self):
        return self.status != OUT_OF_DOMAIN

    def pythagorean_residual(self):
        # relative to the magnitude of the terms; near blow-up s^p and c^p cancel
        sp, cp = self.s ** self.p, self.c ** self.p
        return abs(sp + cp - 1.0) / max(1.0, abs(sp), abs(cp))


def real_domain(p):
    """Maximal real interval of the solution; whole line for even ``p``."""
    pp = pparam(p)
    k = constants_for(pp)
    if pp.even:
        return RealDomain("whole_line_periodic", -math.inf, math.inf, k.real_period)
    return RealDomain("open_interval", -k.B, k.A + k.B, None)


def _newton(f, df, target, lo, hi, x0, tol):
    """Safeguarded Newton for increasing ``f`` on ``[lo, hi]`` with bisection fallback.

    The residual tolerance is relative to ``|target|``; near 0 and near the
    blow-up the quantities of interest are small and need relative accuracy.
    """
    x = min(max(x0, lo), hi)
    scale = abs(target)
    for _ in range(NEWTON_MAXIT):
        r = f(x) - target
        if abs(r) <= tol * scale:
            d = df(x)
            if d > 0 and math.isfinite(d):
                xn = x - r / d
                if lo <= xn <= hi:
                    x = xn
            return x
        if r > 0:
            hi = x
        else:
            lo = x
        d = df(x)
        xn = x - r / d if d > 0 and math.isfinite(d) else math.nan
        if not lo < xn < hi:
            xn = 0.5 * (lo + hi)
        if xn == x:
            return x
        x = xn
    raise InversionError(f"Newton/bisection did not reach |residual| <= {tol * scale:.3e}")


@functools.lru_cache(maxsize=None)
def _sigma_at_minus_one(p):
    return _q.sigma_odd(p, -1.0)


def _series_guess(p, u, lo, hi):
    """Invert the hypergeometric series for a starting point; ``None`` if unusable."""
    x = u
    for _ in range(30):
        if not lo <= x <= hi or abs(x) ** p > 0.9:
            return None
        f = sigma_hyp(p, x).real - u
        x_new = x - f * (1.0 - x ** p) ** (1.0 - 1.0 / p)
        if abs(x_new - x) <= 1e-16 * (1.0 + abs(x)):
            return x_new
        x = x_new
    return x


def _core(p, u):
    """``(s(u), c(u))`` for ``u`` in ``[0, K]`` (even) or ``(-B, K]`` (odd)."""
    if u == 0.0:
        return 0.0, 1.0
    b = -1.0 + 1.0 / p
    if p % 2 == 1 and u < _sigma_at_minus_one(p):
        head, tail = _q._b_pieces(p)
        g = u + head + tail  # = T(w), T the tail integral in w = -1/s
        g = max(g, 5e-324)
        w0 = ((p - 2) * g) ** (1.0 / (p - 2))

        def tail_int(w):
            return _q._real_origin(w, p, +1, b, p - 3).value

        def tail_der(w):
            return w ** (p - 3) * (1.0 + w ** p) ** b

        w = _newton(tail_int, tail_der, g, 0.0, 1.0, w0, NEWTON_TOL)
        if w <= 0.0:
            raise InversionError("tail inversion collapsed to w = 0")
        s = -1.0 / w
        c = (1.0 + w ** p) ** (1.0 / p) / w
        return s, c
    lo = -1.0 if p % 2 == 1 else 0.0
    hi = 0.5 ** (1.0 / p) * (1.0 + 1e-12)
    x0 = _series_guess(p, u, lo, hi)
    if x0 is None:
        x0 = u

    def sig(x):
        return _q._sigma_core(p, x, False)

    def dsig(x):
        return (1.0 - x ** p) ** b

    x = _newton(sig, dsig, u, lo, hi, x0, NEWTON_TOL)
    c = (1.0 - x ** p) ** (1.0 / p)
    return x, c


def invert_sigma(p, y):
    """Solve ``sigma(x) = y``.

    ``y`` must lie in ``[-A, A]`` for even ``p`` or ``(-B, A]`` for odd ``p``.
    """
    pp = pparam(p)
    k = constants_for(pp)
    y = float(y)
    if pp.even:
        if not -k.A <= y <= k.A:
            raise ValueError(f"y = {y} outside [-A, A] = [{-k.A}, {k.A}]")
        sgn = -1.0 if y < 0 else 1.0
        u = abs(y)
        if u <= k.K:
            return sgn * _core(pp.p, u)[0]
        return sgn * _core(pp.p, k.A - u)[1]
    if not -k.B < y <= k.A:
        raise ValueError(f"y = {y} outside (-B, A] = ({-k.B}, {k.A}]")
    if y <= k.K:
        return _core(pp.p, y)[0]
    return _core(pp.p, k.A - y)[1]


def _finish(p, x, s, c):
    s += 0.0
    c += 0.0
    if c == 0.0:
        return RealEval(x, s, c, math.copysign(math.inf, s), AT_POLE, p)
    return RealEval(x, s, c, s / c, OK, p)


def eval_real(p, x):
    """Evaluate ``(s, c, t)`` at real ``x``.

    Odd ``p`` outside the open interval ``(-B, A + B)`` yields status
    ``out_of_domain`` with NaN values rather than an exception.
    """
    pp = pparam(p)
    k = constants_for(pp)
    x = float(x)
    if not math.isfinite(x):
        nan = math.nan
        return RealEval(x, nan, nan, nan, OUT_OF_DOMAIN, pp.p)
    if pp.even:
        period = k.real_period
        xr = x - period * round(x / period)
        flip = 1.0
        if xr > k.A:
            xr -= 2.0 * k.A
            flip = -1.0
        elif xr < -k.A:
            xr += 2.0 * k.A
            flip = -1.0
        sgn = -1.0 if xr < 0 else 1.0
        u = abs(xr)
        if u <= k.K:
            s, c = _core(pp.p, u)
        else:
            c, s = _core(pp.p, max(k.A - u, 0.0))
        return _finish(pp.p, x, sgn * flip * s, flip * c)
    if not -k.B < x < k.A + k.B:
        nan = math.nan
        return RealEval(x, nan, nan, nan, OUT_OF_DOMAIN, pp.p)
    if x <= k.K:
        s, c = _core(pp.p, x)
    else:
        c, s = _core(pp.p, k.A - x)
    return _finish(pp.p, x, s, c)


def t_real(p, x):
    """``s(x)/c(x)``; signed infinity at zeros of ``c``, NaN outside the domain."""
    return eval_real(p, x).t

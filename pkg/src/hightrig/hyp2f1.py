"""Gauss hypergeometric series, used as an independent oracle near the origin.

Only the convergent series regime ``|z| <= 0.95`` is covered.  For the two
parameter patterns in use,

    sigma(w) = w F(1/p, 1 - 1/p; 1 + 1/p;  w^p)
    tau(w)   = w F(1/p, 2/p;     1 + 1/p; -w^p)
"""
import math
from typing import NamedTuple

from .constants import pparam

__all__ = ["SeriesResult", "SeriesConvergenceError", "gauss_2f1", "sigma_hyp", "tau_hyp"]

MAX_Z = 0.95
MAX_TERMS = 800
TAIL_TOL = 1e-15


class SeriesResult(NamedTuple):
    value: complex
    terms: int
    tail_bound: float


class SeriesConvergenceError(ArithmeticError):
    pass


def gauss_2f1(a, b, c, z, *, full=False, max_terms=MAX_TERMS):
    """Partial sums of ``sum_n (a)_n (b)_n / ((c)_n n!) z^n``.

    Summation stops once the geometric bound on the remaining tail drops
    below ``1e-15 * max(1, |S|)``.  Terms are accumulated with Neumaier
    compensation.  ``c`` must not be a non-positive integer.

    Raises
    ------
    SeriesConvergenceError
        If ``|z| > 0.95`` or the tail bound is not met within ``max_terms``.
    """
    z = complex(z)
    az = abs(z)
    if c <= 0 and float(c).is_integer():
        raise ValueError("c must not be a non-positive integer")
    if az > MAX_Z * (1.0 + 1e-12):
        raise SeriesConvergenceError(f"|z| = {az:.6g} is outside the series regime |z| <= {MAX_Z}")
    total = 1 + 0j
    comp = 0j
    term = 1 + 0j
    bound = math.inf
    for n in range(max_terms):
        factor = (a + n) * (b + n) / ((c + n) * (n + 1))
        if factor == 0:
            bound = 0.0
            break
        term = term * factor * z
        y = total + term
        # Neumaier: keep the low-order part lost in y, per component
        cr = (total.real - y.real) + term.real if abs(total.real) >= abs(term.real) \
            else (term.real - y.real) + total.real
        ci = (total.imag - y.imag) + term.imag if abs(total.imag) >= abs(term.imag) \
            else (term.imag - y.imag) + total.imag
        comp += complex(cr, ci)
        total = y
        # later ratios are at most |z| * max(1, next factor) for these patterns
        nxt = (a + n + 1) * (b + n + 1) / ((c + n + 1) * (n + 2))
        rho = az * max(1.0, abs(nxt))
        if rho < 1.0:
            bound = abs(term) * rho / (1.0 - rho)
            if bound < TAIL_TOL * max(1.0, abs(total)):
                result = SeriesResult(total + comp, n + 1, bound)
                return result if full else result.value
    else:
        raise SeriesConvergenceError(
            f"2F1 series: tail bound {bound:.3e} after {max_terms} terms at |z| = {az:.6g}")
    result = SeriesResult(total + comp, n + 1, bound)
    return result if full else result.value


def _check_arg(w, p):
    w = complex(w)
    if abs(w) ** p > MAX_Z * (1.0 + 1e-12):
        raise SeriesConvergenceError(f"|w|^p = {abs(w) ** p:.6g} exceeds {MAX_Z}")
    return w


def _wpow(w, p):
    return complex(w.real ** p, 0.0) if w.imag == 0.0 else w ** p


def sigma_hyp(p, w):
    """``int_0^w (1 - zeta^p)^(-1 + 1/p) d zeta`` via its ``2F1`` form, ``|w|^p <= 0.95``."""
    p = pparam(p).p
    w = _check_arg(w, p)
    if w == 0:
        return 0j
    return w * gauss_2f1(1.0 / p, 1.0 - 1.0 / p, 1.0 + 1.0 / p, _wpow(w, p))


def tau_hyp(p, w):
    """``int_0^w (1 + zeta^p)^(-2/p) d zeta`` via its ``2F1`` form, ``|w|^p <= 0.95``."""
    p = pparam(p).p
    w = _check_arg(w, p)
    if w == 0:
        return 0j
    return w * gauss_2f1(1.0 / p, 2.0 / p, 1.0 + 1.0 / p, -_wpow(w, p))

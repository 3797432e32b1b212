"""Gamma function and the closed-form constants of the system ``s' = c^(p-1), c' = -s^(p-1)``.

Every evaluation engine is parameterised by a :class:`PParam`; the constants
attached to it are computed once per ``p`` and cached.
"""
import cmath
import functools
import math
from dataclasses import dataclass

__all__ = [
    "PParam", "ConstantSet", "gamma_fn", "constants_for", "pparam",
]

# Lanczos approximation, g = 7, nine coefficients.
_LANCZOS_G = 7
_LANCZOS_COEF = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_SQRT_2PI = math.sqrt(2.0 * math.pi)


def gamma_fn(x):
    """Gamma function for real ``x > 0``.

    Lanczos approximation for ``x >= 1/2``, Euler reflection below.

    Raises
    ------
    ValueError
        If ``x <= 0``.
    """
    x = float(x)
    if not x > 0.0:
        raise ValueError(f"gamma_fn requires x > 0, got {x!r}")
    if x < 0.5:
        return math.pi / (math.sin(math.pi * x) * gamma_fn(1.0 - x))
    y = x - 1.0
    acc = _LANCZOS_COEF[0]
    for i in range(1, len(_LANCZOS_COEF)):
        acc += _LANCZOS_COEF[i] / (y + i)
    t = y + _LANCZOS_G + 0.5
    return _SQRT_2PI * t ** (y + 0.5) * math.exp(-t) * acc


@dataclass(frozen=True)
class PParam:
    """The integer exponent ``p`` with its parity and roots of unity.

    ``alpha = exp(2 pi i / p)`` and ``beta = exp(pi i / p)``.
    """

    p: int

    def __post_init__(self):
        if isinstance(self.p, bool) or not isinstance(self.p, int):
            raise TypeError(f"p must be an int, got {type(self.p).__name__}")
        if self.p < 2:
            raise ValueError(f"p must be >= 2, got {self.p}")

    @property
    def even(self):
        return self.p % 2 == 0

    @property
    def parity(self):
        return "even" if self.even else "odd"

    @property
    def alpha(self):
        return cmath.exp(2j * math.pi / self.p)

    @property
    def beta(self):
        return cmath.exp(1j * math.pi / self.p)

    @property
    def constants(self):
        return constants_for(self)


def pparam(p):
    """Coerce ``p`` (an int or a :class:`PParam`) to a :class:`PParam`."""
    if isinstance(p, PParam):
        return p
    return _pparam_cached(p)


@functools.lru_cache(maxsize=None)
def _pparam_cached(p):
    return PParam(p)


@dataclass(frozen=True)
class ConstantSet:
    """Real constants for one ``p``.

    ``A`` is the first positive zero of ``c``; ``B`` is the lower blow-up
    reach for odd ``p``; ``K`` and ``L`` are the inradius and circumradius of
    the regular ``p``-gon image of the unit disc.  For ``p = 2`` the
    Gamma-formula for ``B`` hits the pole of Gamma at 0, so ``B = L = inf``
    and ``b_infinite`` is set.
    """

    p: int
    A: float
    B: float
    K: float
    L: float
    picard_r: float
    band_halfwidth: float
    real_period: "float | None"
    complex_period: "float | None"
    b_infinite: bool = False

    def identity_residuals(self):
        """Residuals of ``A/B = 2cos(pi/p)``, ``A = 2K``, ``L = B`` and ``L cos(pi/p) = K``."""
        if self.b_infinite:
            nan = float("nan")
            return {"ratio": nan, "a_minus_2k": self.A - 2.0 * self.K,
                    "l_minus_b": nan, "l_cos_minus_k": nan}
        cpi = math.cos(math.pi / self.p)
        return {
            "ratio": self.A / self.B / (2.0 * cpi) - 1.0,
            "a_minus_2k": self.A - 2.0 * self.K,
            "l_minus_b": self.L - self.B,
            "l_cos_minus_k": self.L * cpi / self.K - 1.0,
        }


def _a_gamma(p):
    return gamma_fn(1.0 / p) ** 2 / gamma_fn(2.0 / p) / p


def _b_gamma(p):
    return gamma_fn(1.0 - 2.0 / p) * gamma_fn(1.0 / p) / gamma_fn(1.0 - 1.0 / p) / p


@functools.lru_cache(maxsize=None)
def _constants_cached(p):
    A = _a_gamma(p)
    K = 0.5 * A
    if p == 2:
        B = L = math.inf
        halfwidth = math.inf
        picard = 1.0  # 0**0 = 1 convention
        b_inf = True
    else:
        B = _b_gamma(p)
        L = K / math.cos(math.pi / p)
        halfwidth = K * math.tan(math.pi / p)
        picard = (p - 2) ** (p - 2) / (p - 1) ** (p - 1)
        b_inf = False
    even = p % 2 == 0
    return ConstantSet(
        p=p, A=A, B=B, K=K, L=L, picard_r=picard, band_halfwidth=halfwidth,
        real_period=4.0 * A if even else None,
        complex_period=8.0 * K if even else None,
        b_infinite=b_inf,
    )


def constants_for(p):
    """Return the cached :class:`ConstantSet` for ``p``."""
    return _constants_cached(pparam(p).p)

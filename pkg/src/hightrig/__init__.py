"""Higher trigonometric functions ``s``, ``c`` solving ``s' = c^(p-1)``, ``c' = -s^(p-1)``."""
from ._backend import BACKEND, available_backends
from .complex_trig import (ComplexDomainSpec, ComplexEval, SeriesPair, eval_complex,
                           eval_disc, march, polygon_geometry, sc_from_t, t_complex,
                           taylor_coeffs)
from .constants import ConstantSet, PParam, constants_for, gamma_fn, pparam
from .hyp2f1 import gauss_2f1, sigma_hyp, tau_hyp
from .quadrature import IntegralSpec, evaluate, integrate_de
from .real_trig import RealEval, eval_real, invert_sigma, real_domain, t_real

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "available_backends",
    "ComplexDomainSpec", "ComplexEval", "SeriesPair", "eval_complex", "eval_disc", "march",
    "polygon_geometry", "sc_from_t", "t_complex", "taylor_coeffs",
    "ConstantSet", "PParam", "constants_for", "gamma_fn", "pparam",
    "gauss_2f1", "sigma_hyp", "tau_hyp",
    "IntegralSpec", "evaluate", "integrate_de",
    "RealEval", "eval_real", "invert_sigma", "real_domain", "t_real",
]

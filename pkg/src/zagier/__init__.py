"""Exact arithmetic for Zagier polynomials and their classical relatives."""

from .exact_arith import NotExpandable, Poly, RationalFunction, series_expand
from .families import (
    bernoulli_number,
    bernoulli_poly,
    chebyshev_T,
    chebyshev_U,
    euler_number,
    euler_poly,
    gegenbauer,
)
from .periodicity import HalfInteger, Verdict, classify_even_zagier, classify_odd_zagier
from .zagier import UndefinedIndex, modified_euler_poly, zagier_number, zagier_poly

__version__ = "0.1.0"

"""Shuffle-algebra models of cohomological and K-theoretic Hall algebras of quivers."""

from .quiver import Quiver, euler_form
from .symfun import LaurentPoly, MultiPoly, TruncSeries, VarSpec
from .coha import CohaElem, CohaSeriesElem, coha_mul, coha_mul_series

__all__ = [
    "Quiver",
    "euler_form",
    "VarSpec",
    "MultiPoly",
    "LaurentPoly",
    "TruncSeries",
    "CohaElem",
    "CohaSeriesElem",
    "coha_mul",
    "coha_mul_series",
]

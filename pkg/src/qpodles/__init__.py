"""Exact and numeric computations on the standard Podleś sphere.

Twisted cyclic cocycles, their pairings with the line-bundle projections
P_N, and the 0-summable Dirac operator with its index.
"""
from .scalar import RatFunc, Scalar, eval_numeric, qbinomial, qfactorial, qint
from .suq2 import AlgebraElement, gen, haar, v_basis
from .podles import PodlesElement, pgen
from .expr import ParseError, parse
from .cyclic import Chain, chern, pairing, reduced_chern2
from .ktheory import projection_P, verify_projection
from .spectral import dirac_spectrum, index_and_qindex, poincare_pairing

__version__ = "0.1.0"

__all__ = [
    "AlgebraElement", "Chain", "ParseError", "PodlesElement", "RatFunc", "Scalar",
    "chern", "dirac_spectrum", "eval_numeric", "gen", "haar", "index_and_qindex",
    "pairing", "parse", "pgen", "poincare_pairing", "projection_P", "qbinomial",
    "qfactorial", "qint", "reduced_chern2", "v_basis", "verify_projection",
]

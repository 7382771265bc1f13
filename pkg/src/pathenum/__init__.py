"""Exact enumeration of weighted lattice paths with horizontal steps.

Everything is computed in Z[w] (w = the horizontal-step weight) with
arbitrary-precision integers: Motzkin and Schroeder counting triangles and
their inverses, Hankel determinants in closed form and by fraction-free
elimination, rational generating functions for paths confined to a band,
and a brute-force dynamic-programming oracle that every formula is checked
against.

The hot coefficient-vector kernels run from a compiled extension when it
was built (see kernels.BACKEND); a pure-Python fallback is selected at
import time otherwise.
"""

from .algebra import (
    InexactDivision,
    LaurentSeries,
    NonUnitConstant,
    OmegaPoly,
    RationalGF,
    TPoly,
    TSeries,
    W,
    binom_general,
    laurent_split,
    series_from_rational,
    series_inv,
    series_mul,
    substitute_neg_t,
)
from .checks import CheckResult
from .kernels import BACKEND
from .matrices import SquareMatrix, TriMatrix
from .oracle import (
    BandViolation,
    CountTable,
    IndexOutOfTriangle,
    PathSpec,
    compress_schroder,
    count_paths,
    oracle_series,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BandViolation",
    "CheckResult",
    "CountTable",
    "IndexOutOfTriangle",
    "InexactDivision",
    "LaurentSeries",
    "NonUnitConstant",
    "OmegaPoly",
    "PathSpec",
    "RationalGF",
    "SquareMatrix",
    "TPoly",
    "TriMatrix",
    "TSeries",
    "W",
    "binom_general",
    "compress_schroder",
    "count_paths",
    "laurent_split",
    "oracle_series",
    "series_from_rational",
    "series_inv",
    "series_mul",
    "substitute_neg_t",
]

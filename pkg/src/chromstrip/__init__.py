"""Exact chromatic polynomials of toroidal and Klein-bottle chains of complete graphs.

The main entry points are :func:`assemble` (exact expansion), :func:`eval_at`,
:func:`find_zeros`, :func:`trace_locus` and :func:`qc_solve`.
"""

from .assembler import ChromaticResult, IntegralityError, assemble, coefficient_sum, eval_at
from .catalog import (
    CatalogError,
    FamilySpec,
    FBasisVector,
    SpectrumEntry,
    general_lambda_alternating,
    general_lambda_principal,
    klein_catalog,
    lambda21_family,
    toroidal_catalog,
)
from .oracle import build_graph, count_colorings_dp, count_colorings_naive
from .partitions import PartitionX, coeff_c, enumerate_partitions
from .polycore import RationalPoly, f_poly, falling_factorial
from .spectra import dominance_at, qc_solve, real_axis_crossings, trace_locus, w_function
from .zeros import ZeroSet, find_zeros, zero_support_check

__version__ = "0.1.0"

__all__ = [
    "CatalogError",
    "ChromaticResult",
    "FBasisVector",
    "FamilySpec",
    "IntegralityError",
    "PartitionX",
    "RationalPoly",
    "SpectrumEntry",
    "ZeroSet",
    "assemble",
    "build_graph",
    "coeff_c",
    "coefficient_sum",
    "count_colorings_dp",
    "count_colorings_naive",
    "dominance_at",
    "enumerate_partitions",
    "eval_at",
    "f_poly",
    "falling_factorial",
    "find_zeros",
    "general_lambda_alternating",
    "general_lambda_principal",
    "klein_catalog",
    "lambda21_family",
    "qc_solve",
    "real_axis_crossings",
    "toroidal_catalog",
    "trace_locus",
    "w_function",
    "zero_support_check",
]

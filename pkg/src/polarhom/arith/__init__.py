"""Exact scalar, polynomial and rational-function arithmetic."""
from polarhom.arith.factor import factor_over, factor_rational, is_irreducible, roots_in
from polarhom.arith.linalg import det, nullspace, rank, rref, solve
from polarhom.arith.mpoly import MPoly, bivariate_resultant
from polarhom.arith.numfield import NumberField, NumberFieldElement, coordinates, field_of, make_field, simplify
from polarhom.arith.poly import UniPoly, gcd, resultant, squarefree_factor, squarefree_part, xgcd
from polarhom.arith.ratfunc import PartialFractionTerm, RatFunc, field_trace, partial_fractions, recombine, trace_sum
from polarhom.arith.scalar import Scalar, TauMismatch

__all__ = [
    "MPoly", "NumberField", "NumberFieldElement", "PartialFractionTerm", "RatFunc", "Scalar",
    "TauMismatch", "UniPoly", "bivariate_resultant", "coordinates", "det", "factor_over",
    "factor_rational", "field_of", "field_trace", "gcd", "is_irreducible", "make_field", "nullspace",
    "partial_fractions", "rank", "recombine", "resultant", "roots_in", "rref", "simplify", "solve",
    "squarefree_factor", "squarefree_part", "trace_sum", "xgcd",
]

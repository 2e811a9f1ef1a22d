"""P^1 and odd hyperelliptic curves, their points and rational differentials."""
from polarhom.curves.differential import (
    Differential1,
    HigherOrderPole,
    divisor_of,
    fiber_points,
    holomorphic_basis,
    ord_at,
    pole_places,
    residue_at,
    residue_sum_check,
)
from polarhom.curves.model import INFINITY, CurveError, CurveModel, CurvePoint, Divisor, Fiber
from polarhom.curves.riemann_roch import differential_space, third_kind
from polarhom.curves.series import Laurent, PrecisionError

__all__ = [
    "INFINITY", "CurveError", "CurveModel", "CurvePoint", "Differential1", "Divisor", "Fiber",
    "HigherOrderPole", "Laurent", "PrecisionError", "differential_space", "divisor_of",
    "fiber_points", "holomorphic_basis", "ord_at", "pole_places", "residue_at",
    "residue_sum_check", "third_kind",
]

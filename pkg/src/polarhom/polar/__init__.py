"""Polar chains on curves, the boundary map and finite-support homology."""
from polarhom.polar.chains import Chain0, Chain1, PuncturedCurve, boundary1, is_admissible
from polarhom.polar.homology import (
    NotStabilized,
    SupportSampler,
    hp0_finite_support,
    hp0_stabilized,
    hp1_finite_support,
    hp1_punctured,
    hp_projective,
)
from polarhom.polar.mayer_vietoris import MVReport, mv_check

__all__ = [
    "Chain0", "Chain1", "MVReport", "NotStabilized", "PuncturedCurve", "SupportSampler", "boundary1",
    "hp0_finite_support", "hp0_stabilized", "hp1_finite_support", "hp1_punctured", "hp_projective",
    "is_admissible", "mv_check",
]

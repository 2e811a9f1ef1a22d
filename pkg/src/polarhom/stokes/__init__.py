"""Numerical oracle for the Cauchy-Stokes formula with simple poles on P^1."""
from polarhom.stokes.forms import SmoothTestForm, dbar_eval, v_eval
from polarhom.stokes.kernels import BACKEND
from polarhom.stokes.oracle import QuadratureConfig, QuadratureFailure, StokesResult, packaged_configs, stokes_check

__all__ = [
    "BACKEND", "QuadratureConfig", "QuadratureFailure", "SmoothTestForm", "StokesResult", "dbar_eval",
    "packaged_configs", "stokes_check", "v_eval",
]

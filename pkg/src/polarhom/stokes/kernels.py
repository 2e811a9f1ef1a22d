"""Kernel selection: the compiled extension when built, numpy otherwise.

Set POLARHOM_PURE_PYTHON=1 to force the numpy kernels.
"""
import os

BACKEND = "numpy"
if os.environ.get("POLARHOM_PURE_PYTHON") != "1":
    try:
        from polarhom.stokes._kernels import grid_sum, polar_sum  # noqa: F401

        BACKEND = "cython"
    except ImportError:  # pragma: no cover - depends on the build
        pass
if BACKEND == "numpy":
    from polarhom.stokes._kernels_py import grid_sum, polar_sum  # noqa: F401


def load(backend: str):
    """Kernel pair for an explicit backend name ("cython" or "numpy")."""
    if backend == "cython":
        from polarhom.stokes import _kernels as mod
    elif backend == "numpy":
        from polarhom.stokes import _kernels_py as mod
    else:
        raise ValueError(f"unknown backend {backend!r}")
    return mod.grid_sum, mod.polar_sum

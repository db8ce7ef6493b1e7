"""Quantum correlations and coherence of the anisotropic XY chain in a transverse field."""

from ._xyqc import *  # noqa: F401,F403
from ._xyqc import CSV_HEADER, Error

__all__ = [name for name in dir() if not name.startswith("_")]

"""Saddle-point expansion coefficients for [z^n] exp(phi(z)) and Lagrangean schemes."""

from .catalog import CATALOG, PhiSpec, get_phi
from .saddle import expand, solve_saddle
from .series import TruncatedSeries

__all__ = ["CATALOG", "PhiSpec", "TruncatedSeries", "expand", "get_phi", "solve_saddle"]
__version__ = "0.1.0"

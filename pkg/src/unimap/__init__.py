"""Unicellular maps: exact counting, a fractional bijection with
C-decorated trees, uniform sampling, Stanley character polynomials and
3-constellation formulas, with brute-force oracles for all of them."""

from .maps import DomainError, RotationMap, StructureError, genus

__version__ = "0.1.0"

__all__ = ["DomainError", "RotationMap", "StructureError", "genus", "__version__"]

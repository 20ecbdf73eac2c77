"""Exact Schubert calculus: symmetric functions, divided differences,
degeneracy-locus classes, enumerative coefficients and the Lagrangian
Pieri rule."""

from .errors import AlphabetMismatch, DomainError, InexactDivision
from .polyring import MPoly, PolyRing

__version__ = "0.1.0"

__all__ = ["AlphabetMismatch", "DomainError", "InexactDivision", "MPoly", "PolyRing", "__version__"]

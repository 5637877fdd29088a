"""Closed-form Betti tables of glued chordal clique complexes, their skeletons and duals.

The brute-force oracle in :mod:`chordal_betti.oracle` recomputes everything from faces.
"""

from __future__ import annotations

from .algebra import BettiTable, FVector, IntPolynomial
from .complex_core import FacetComplex, GluingSpec, alexander_dual, realize, skeleton, validate_spec
from .errors import ChordalBettiError

__all__ = [
    "BettiTable",
    "ChordalBettiError",
    "FVector",
    "FacetComplex",
    "GluingSpec",
    "IntPolynomial",
    "alexander_dual",
    "realize",
    "skeleton",
    "validate_spec",
]

__version__ = "0.1.0"

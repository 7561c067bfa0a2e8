"""Right loops from Cayley tables: twists, transversals, Z^B, and alpha words."""

from .core import (
    CayleyTable,
    NonBijective,
    NotARightLoop,
    NotLeftSolvable,
    Permutation,
    RightLoopTable,
    TableStructureError,
    ValidationReport,
    left_divide,
    left_translation,
    right_divide,
    right_translation,
    validate,
)
from .twist import SpecViolation, TwistSpec, translation_identities, twist

__all__ = [
    "CayleyTable",
    "NonBijective",
    "NotARightLoop",
    "NotLeftSolvable",
    "Permutation",
    "RightLoopTable",
    "SpecViolation",
    "TableStructureError",
    "TwistSpec",
    "ValidationReport",
    "left_divide",
    "left_translation",
    "right_divide",
    "right_translation",
    "translation_identities",
    "twist",
    "validate",
]

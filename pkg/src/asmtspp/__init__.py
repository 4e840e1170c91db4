"""Exact computation of A_n(u, v; x), its Schur expansion over totally symmetric
plane partitions, and brute-force checks against alternating sign matrices."""

from .errors import DivisibilityError, DomainError, ResourceGuardError, StructuralError, VerificationFailure
from .exactring import PolyMatrix, Polynomial, VarSet

__version__ = "0.1.0"

__all__ = [
    "DivisibilityError",
    "DomainError",
    "PolyMatrix",
    "Polynomial",
    "ResourceGuardError",
    "StructuralError",
    "VarSet",
    "VerificationFailure",
]

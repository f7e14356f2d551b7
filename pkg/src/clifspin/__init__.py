"""Clifford-algebra kernel for Weyl, Pauli and Dirac spinors in Cl(3,0) and Cl(0,3)."""
from .algebra import (
    CL03,
    CL13,
    CL30,
    CenterScalar,
    CliffordError,
    Multivector,
    ParityError,
    Signature,
    SignatureError,
    conjugation,
    extended_metric,
    geometric_product,
    grade_involution,
    grade_projection,
    mv_exp,
    reversion,
)
from .weyl import SpinorKind, WeylSpinor

__version__ = "0.1.0"

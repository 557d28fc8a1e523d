"""
Skew PBW extensions: coefficient rings, presentations, normal forms and
Groebner bases of left ideals and left submodules.
"""

from .coeffring import QQ, CoeffRing, PolynomialRing, RationalField, polynomial_ring
from .groebner import (
    DivisionResult,
    GroebnerBasis,
    GroebnerOptions,
    bf_set,
    buchberger,
    check_criterion,
    divide,
    is_member,
    lift,
)
from .matrixkit import (
    MatrixOverA,
    complete_unimodular_unit_entry,
    extract_free_basis,
    idempotent_diagonalize_division,
    is_idempotent_transpose,
    is_unimodular_column,
    left_inverse,
    verify_inverse_pair,
)
from .modules import FreeModule, ModuleVector, mod_bf_set, mod_buchberger, mod_divide
from .monomials import ExponentVector
from .order import ModuleOrder, MonomialOrder
from .poly import NCPolynomial
from .presentation import Presentation

__all__ = [
    "QQ",
    "CoeffRing",
    "PolynomialRing",
    "RationalField",
    "polynomial_ring",
    "DivisionResult",
    "GroebnerBasis",
    "GroebnerOptions",
    "bf_set",
    "buchberger",
    "check_criterion",
    "divide",
    "is_member",
    "lift",
    "MatrixOverA",
    "complete_unimodular_unit_entry",
    "extract_free_basis",
    "idempotent_diagonalize_division",
    "is_idempotent_transpose",
    "is_unimodular_column",
    "left_inverse",
    "verify_inverse_pair",
    "FreeModule",
    "ModuleVector",
    "mod_bf_set",
    "mod_buchberger",
    "mod_divide",
    "ExponentVector",
    "ModuleOrder",
    "MonomialOrder",
    "NCPolynomial",
    "Presentation",
]

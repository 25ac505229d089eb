"""Compositae of ordinary generating functions in exact rational arithmetic."""

from .errors import (
    CompositaError,
    ExprSyntaxError,
    InsufficientRows,
    LinearTermNotOne,
    NonzeroConstant,
    NonzeroConstantTerm,
    NonzeroInnerConstant,
    PreconditionError,
    ResidualNonzero,
    RowOutOfRange,
    ShapeMismatch,
    VerificationError,
    ZeroConstantTerm,
    ZeroLeadingEntry,
    ZeroLinearTerm,
    ZeroR0,
)
from .series import Series
from .triangle import ClosedFormFamily, Composita

__version__ = "0.1.0"

__all__ = [
    "ClosedFormFamily",
    "Composita",
    "CompositaError",
    "ExprSyntaxError",
    "InsufficientRows",
    "LinearTermNotOne",
    "NonzeroConstant",
    "NonzeroConstantTerm",
    "NonzeroInnerConstant",
    "PreconditionError",
    "ResidualNonzero",
    "RowOutOfRange",
    "Series",
    "ShapeMismatch",
    "VerificationError",
    "ZeroConstantTerm",
    "ZeroLeadingEntry",
    "ZeroLinearTerm",
    "ZeroR0",
]

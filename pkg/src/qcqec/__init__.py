"""Quasi-cyclic codes over GF(q^2) and the quantum codes they induce."""

from qcqec.errors import (
    BudgetExceeded,
    PreconditionError,
    QcqecError,
    SingularMatrixError,
    SpecError,
)
from qcqec.gf import Field, ExtField, field_make, ext_field_make

__all__ = [
    "BudgetExceeded",
    "PreconditionError",
    "QcqecError",
    "SingularMatrixError",
    "SpecError",
    "Field",
    "ExtField",
    "field_make",
    "ext_field_make",
]

__version__ = "0.1.0"

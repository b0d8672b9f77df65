"""H-functions, classification and HFL⁻ of L-space links."""

from .classify import (
    Classification,
    InvariantReport,
    Kind,
    QPInput,
    Tri,
    classify_type,
    invariants_from_classification,
    is_special,
    qp_obstruction,
)
from .errors import BoxTooSmallError, LSpaceError, NotLSpaceLinkError, SchemaError
from .hfunction import HTable, LinkInput, residual_check, restrict_to_sublink, solve_knot, solve_link
from .laurent import LaurentSeries, coefficient, multiply, normalize_alexander
from .lattice import Box, HalfInt, LatticePoint, iterate_box, leq, minus_eB

__all__ = [
    "Box", "BoxTooSmallError", "Classification", "HTable", "HalfInt", "InvariantReport", "Kind",
    "LSpaceError", "LatticePoint", "LaurentSeries", "LinkInput", "NotLSpaceLinkError", "QPInput",
    "SchemaError", "Tri", "classify_type", "coefficient", "invariants_from_classification",
    "is_special", "iterate_box", "leq", "minus_eB", "multiply", "normalize_alexander",
    "qp_obstruction", "residual_check", "restrict_to_sublink", "solve_knot", "solve_link",
]

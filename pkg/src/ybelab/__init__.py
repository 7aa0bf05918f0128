"""Exact computer algebra for Rota-Baxter operators, O-operators and
associative Yang-Baxter equations over Q and F_p."""
from .field import QQ, GF, Field, FieldError, NoHalfError
from .report import Check, Report
from .algebra import (
    Algebra,
    Bimodule,
    BimoduleAlgebra,
    MatchedPair,
    InvalidStructure,
    ShapeError,
    validate_algebra,
    validate_bimodule,
    validate_bimodule_algebra,
    validate_matched_pair,
    regular_bimodule,
    regular_bimodule_algebra,
    dual_bimodule,
    matched_pair_sum,
    semidirect_sum,
    split_algebra,
)
from .fixtures import fixture

__version__ = "0.1.0"

__all__ = [
    "QQ",
    "GF",
    "Field",
    "FieldError",
    "NoHalfError",
    "Check",
    "Report",
    "Algebra",
    "Bimodule",
    "BimoduleAlgebra",
    "MatchedPair",
    "InvalidStructure",
    "ShapeError",
    "validate_algebra",
    "validate_bimodule",
    "validate_bimodule_algebra",
    "validate_matched_pair",
    "regular_bimodule",
    "regular_bimodule_algebra",
    "dual_bimodule",
    "matched_pair_sum",
    "semidirect_sum",
    "split_algebra",
    "fixture",
]

"""Exact concordance invariants and obstructions to alternating knots."""

from .concordance import (
    AGREEING,
    NEG_TAU,
    S_HALF,
    SIGMA_HALF,
    BoundReport,
    IndependenceCertificate,
    MissingInvariantData,
    ag_lower_bound,
    alternating_obstruction,
    as_lower_bound,
    deltan_report,
    expr_upsilon,
    get_functional,
    independence_certificate,
    jump_bound_theorem,
)
from .knots import Declared, DeltaKnot, KnotExpr, MatrixKnot, Torus, declared
from .parse import ParseError, parse_expr
from .poly import IntLaurentPoly, delta_n, parse_poly
from .seifert import SeifertMatrix, signature_at, torus_signature
from .upsilon import PLFunction, torus_upsilon

__version__ = "0.1.0"

__all__ = [
    "AGREEING",
    "NEG_TAU",
    "S_HALF",
    "SIGMA_HALF",
    "BoundReport",
    "IndependenceCertificate",
    "MissingInvariantData",
    "ag_lower_bound",
    "alternating_obstruction",
    "as_lower_bound",
    "deltan_report",
    "expr_upsilon",
    "get_functional",
    "independence_certificate",
    "jump_bound_theorem",
    "Declared",
    "DeltaKnot",
    "KnotExpr",
    "MatrixKnot",
    "Torus",
    "declared",
    "ParseError",
    "parse_expr",
    "IntLaurentPoly",
    "delta_n",
    "parse_poly",
    "SeifertMatrix",
    "signature_at",
    "torus_signature",
    "PLFunction",
    "torus_upsilon",
]

"""Exact identity proving for the T, L, B, C, E families."""

from .dsl import (
    FAMILY_NAMES,
    Identity,
    IdentityParseError,
    compile_expr,
    evaluate,
    parse_expr,
    parse_identity,
)
from .expoly import ExpPoly, ep_add, ep_eval, ep_mul, ep_scale, from_family
from .prove import (
    Counterexample,
    NamedIdentity,
    ProofOutcome,
    Proven,
    corpus,
    corpus_entry,
    numeric_sweep,
    prove,
)

__all__ = [
    "FAMILY_NAMES",
    "Counterexample",
    "ExpPoly",
    "Identity",
    "IdentityParseError",
    "NamedIdentity",
    "ProofOutcome",
    "Proven",
    "compile_expr",
    "corpus",
    "corpus_entry",
    "ep_add",
    "ep_eval",
    "ep_mul",
    "ep_scale",
    "evaluate",
    "from_family",
    "numeric_sweep",
    "parse_expr",
    "parse_identity",
    "prove",
]

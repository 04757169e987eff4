"""Finite predomains, round ideal completions, preCuntz semigroups and the
commutative model C0(X)+."""

from ._core import (
    BoundExceeded,
    InternalInconsistency,
    NotAPreCuntz,
    NotAPredomain,
    ParseError,
    PreCuntz,
    PreconditionError,
    Predomain,
    PredomError,
    UnknownElement,
    approx,
    cutdown,
    delta_add,
    delta_split,
    format_structure,
    load_precuntz,
    load_predomain,
    trace,
    validate,
)

__all__ = [
    "BoundExceeded",
    "InternalInconsistency",
    "NotAPreCuntz",
    "NotAPredomain",
    "ParseError",
    "PreCuntz",
    "PreconditionError",
    "Predomain",
    "PredomError",
    "UnknownElement",
    "approx",
    "cutdown",
    "delta_add",
    "delta_split",
    "format_structure",
    "load_precuntz",
    "load_predomain",
    "trace",
    "validate",
]

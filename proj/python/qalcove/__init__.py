"""Fusion rules, quantum dimensions and modularity at roots of unity."""

from ._qalcove import (
    SCHEMA_VERSION,
    InvalidContext,
    SelfCheckFailure,
    ValidationError,
    alcove,
    classify,
    fuse,
    fusion_table,
    info,
    mult,
    qdim,
    smatrix,
    tensor,
)

__all__ = [
    "SCHEMA_VERSION",
    "InvalidContext",
    "SelfCheckFailure",
    "ValidationError",
    "alcove",
    "classify",
    "fuse",
    "fusion_table",
    "info",
    "mult",
    "qdim",
    "smatrix",
    "tensor",
]

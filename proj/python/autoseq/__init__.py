"""Decide first-order properties of automatic sequences."""

from ._core import (
    CompileError,
    InfiniteCountError,
    LinearRep,
    ParseError,
    accept_set,
    count_rep,
    crosscheck,
    decide,
    export,
    library,
    oracle,
    prefix,
    sequences,
)

__all__ = [
    "CompileError",
    "InfiniteCountError",
    "LinearRep",
    "ParseError",
    "accept_set",
    "count_rep",
    "crosscheck",
    "decide",
    "export",
    "library",
    "oracle",
    "prefix",
    "sequences",
]

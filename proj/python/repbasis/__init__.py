"""Additive bases for the integers with a prescribed representation function."""

from ._core import (
    ConfigError,
    InvariantViolation,
    SparsityBound,
    TargetFunction,
    build,
    choose_c,
    count_ordered,
    count_restricted,
    count_restricted_ordered,
    count_unordered,
    counting_fn,
    histogram,
    is_sidon,
    sidon_extension_bound,
    sparsity_threshold,
    u_bound_check,
    u_stream,
    v_decompose,
    verify_certificate,
)

__all__ = [
    "ConfigError",
    "InvariantViolation",
    "SparsityBound",
    "TargetFunction",
    "build",
    "choose_c",
    "count_ordered",
    "count_restricted",
    "count_restricted_ordered",
    "count_unordered",
    "counting_fn",
    "histogram",
    "is_sidon",
    "sidon_extension_bound",
    "sparsity_threshold",
    "u_bound_check",
    "u_stream",
    "v_decompose",
    "verify_certificate",
]

"""Depth, length, and reflection statistics on the classical Coxeter groups.

Thin wrapper over the C++ core; see the project README for the statistics
and the CLI equivalents of these functions.
"""

from ._coxdepth import (
    all_elements,
    blocks_b,
    blocks_d,
    classify,
    closed_form_boolean,
    closed_form_boolean_by_length,
    closed_form_depth_eq_length,
    compose,
    count_boolean,
    count_boolean_by_length,
    count_depth_eq_length,
    depth,
    depth_alt,
    depth_distribution,
    direct_sum,
    factorize,
    format_window,
    inverse,
    length,
    max_depth_profile,
    oddness_b,
    oddness_d,
    oracle,
    parse_window,
    pattern_lists,
    shallow_elements,
    verify_all,
)

__all__ = [
    "all_elements",
    "blocks_b",
    "blocks_d",
    "classify",
    "closed_form_boolean",
    "closed_form_boolean_by_length",
    "closed_form_depth_eq_length",
    "compose",
    "count_boolean",
    "count_boolean_by_length",
    "count_depth_eq_length",
    "depth",
    "depth_alt",
    "depth_distribution",
    "direct_sum",
    "factorize",
    "format_window",
    "inverse",
    "length",
    "max_depth_profile",
    "oddness_b",
    "oddness_d",
    "oracle",
    "parse_window",
    "pattern_lists",
    "shallow_elements",
    "verify_all",
]

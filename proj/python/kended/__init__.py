"""Largest k-ended trees and degree-sum conditions."""

from ._core import (
    ConnectivityError,
    Graph,
    KendedError,
    ParameterError,
    ParseError,
    SizeError,
    check,
    connected_graphs,
    family,
    has_dominating,
    heuristic,
    independence_number,
    max_trees,
    min_leaf_count,
    parse_graph6,
    random_connected,
    replay,
    sharpness,
    sigma,
    size_guard,
    t_k,
    t_k_witness,
    t_profile,
    theorems,
    verify,
    write_graph6,
)

__all__ = [
    "ConnectivityError",
    "Graph",
    "KendedError",
    "ParameterError",
    "ParseError",
    "SizeError",
    "check",
    "connected_graphs",
    "family",
    "has_dominating",
    "heuristic",
    "independence_number",
    "max_trees",
    "min_leaf_count",
    "parse_graph6",
    "random_connected",
    "replay",
    "sharpness",
    "sigma",
    "size_guard",
    "t_k",
    "t_k_witness",
    "t_profile",
    "theorems",
    "verify",
    "write_graph6",
]

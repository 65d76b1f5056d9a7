"""Certifying recognition of normal Helly circular-arc graphs."""

from .graph import Graph, GraphError, ParseError, emit_graph, induced_subgraph, is_isomorphic_small, parse_graph

__all__ = [
    "Graph",
    "GraphError",
    "ParseError",
    "emit_graph",
    "induced_subgraph",
    "is_isomorphic_small",
    "parse_graph",
]

"""Generic rigidity of 2-dimensional point-line frameworks."""
from .graph import (EdgeClass, GraphFormatError, PointLineGraph, VertexKind, load_graph,
                    parse_graph, parse_json, serialize_graph)
from .orient import CircuitReport, CountParams, OrientationState
from .rigidity import SharpState, is_independent, is_rigid, rank, rank_formula_oracle
from .union import UnionCertificate

__all__ = [
    "CircuitReport", "CountParams", "EdgeClass", "GraphFormatError", "OrientationState",
    "PointLineGraph", "SharpState", "UnionCertificate", "VertexKind", "is_independent",
    "is_rigid", "load_graph", "parse_graph", "parse_json", "rank", "rank_formula_oracle",
    "serialize_graph",
]

"""Exact combinatorics of transportation polytopes with prescribed source degrees."""

from .bounded_path import PathCertificate, apply_path, bounded_pivot_path, consistent_sources
from .degree_core import (
    BipartiteTree,
    DegreeFunction,
    count_trees,
    edge_disjoint_pair,
    enumerate_trees,
    make_degree_function,
    make_tree,
    parse_tree,
)
from .pivoting import PivotingGraph, PivotMove, bfs_distance, build_graph, diameter, neighbors, pivot
from .polytope import f_vector, facet_count, hirsch_bound, margins, support, tree_to_vertex

__all__ = [
    "BipartiteTree", "DegreeFunction", "PathCertificate", "PivotMove", "PivotingGraph",
    "apply_path", "bfs_distance", "bounded_pivot_path", "build_graph", "consistent_sources",
    "count_trees", "diameter", "edge_disjoint_pair", "enumerate_trees", "f_vector",
    "facet_count", "hirsch_bound", "make_degree_function", "make_tree", "margins",
    "neighbors", "parse_tree", "pivot", "support", "tree_to_vertex",
]

"""Minibox, Alpha-flag and Čech persistent homology under the Chebyshev metric."""

__version__ = "0.1.0"

from .delaunay import alpha_flag_edges, is_delaunay_edge, verify_witness
from .filtration import Filtration, build_filtration, clique_tetrahedra, clique_triangles
from .geometry import Box, EdgeSet, PointCloud, dist_linf, minibox, preprocess
from .minibox import Strategy, direct_dominance_pairs, minibox_edges, minibox_edges_brute
from .persistence import Diagram, diagrams_equal, persistence_h0, persistence_reduce

__all__ = [
    "Box",
    "Diagram",
    "EdgeSet",
    "Filtration",
    "PointCloud",
    "Strategy",
    "alpha_flag_edges",
    "build_filtration",
    "clique_tetrahedra",
    "clique_triangles",
    "diagrams_equal",
    "direct_dominance_pairs",
    "dist_linf",
    "is_delaunay_edge",
    "minibox",
    "minibox_edges",
    "minibox_edges_brute",
    "persistence_h0",
    "persistence_reduce",
    "preprocess",
    "verify_witness",
]

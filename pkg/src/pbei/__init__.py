"""Exact-arithmetic workbench for parity binomial edge ideals of graphs:
Groebner bases, graded Betti tables, purity of minimal free resolutions."""

from .algebra import DEFAULT_PRIME, Poly, Ring
from .betti import BettiTable, PurityVerdict, ci_betti, koszul_betti, tensor_betti
from .graphs import Graph, classify_pure, parse_graph
from .groebner import Ideal
from .ideals import binomial_edge_ideal, bipartite_swap, parity_ideal

__all__ = [
    "DEFAULT_PRIME",
    "Poly",
    "Ring",
    "BettiTable",
    "PurityVerdict",
    "ci_betti",
    "koszul_betti",
    "tensor_betti",
    "Graph",
    "classify_pure",
    "parse_graph",
    "Ideal",
    "binomial_edge_ideal",
    "bipartite_swap",
    "parity_ideal",
]

__version__ = "0.1.0"

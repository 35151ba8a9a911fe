"""Monomial cut ideals of graphs and checks of their algebraic structure."""

from .cut_monomials import VarContext, cut_ideal, cut_monomial, enumerate_partitions
from .graph_core import Graph, cycle_graph, enumerate_cycles, parse_graph, path_graph
from .homology import BettiTable, graded_betti, invariants_from_betti
from .monomial_ideal import MonomialIdeal, alexander_dual, minimal_primes
from .structure import general_decomposition

__all__ = [
    "BettiTable",
    "Graph",
    "MonomialIdeal",
    "VarContext",
    "alexander_dual",
    "cut_ideal",
    "cut_monomial",
    "cycle_graph",
    "enumerate_cycles",
    "enumerate_partitions",
    "general_decomposition",
    "graded_betti",
    "invariants_from_betti",
    "minimal_primes",
    "parse_graph",
    "path_graph",
]

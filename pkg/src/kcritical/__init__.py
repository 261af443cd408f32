"""Construct, enumerate and verify minimum k-critical bipartite graphs."""

from .construct import (
    construct_conjecture,
    construct_g1,
    construct_g2,
    construct_g2_step,
    construct_negative,
    tilde,
)
from .graph import BipartiteGraph, DegreeProfile, Matching
from .params import ParamSet, derive_params
from .search import SolveResult, lower_bound_edges, solve_biregular, solve_exhaustive
from .verify import (
    HallWitness,
    Verdict,
    is_k_critical,
    is_k_critical_deficiency,
    is_k_critical_deletion,
    is_k_extendable,
    max_matching,
)

__version__ = "0.1.0"

__all__ = [
    "BipartiteGraph",
    "DegreeProfile",
    "HallWitness",
    "Matching",
    "ParamSet",
    "SolveResult",
    "Verdict",
    "construct_conjecture",
    "construct_g1",
    "construct_g2",
    "construct_g2_step",
    "construct_negative",
    "derive_params",
    "is_k_critical",
    "is_k_critical_deficiency",
    "is_k_critical_deletion",
    "is_k_extendable",
    "lower_bound_edges",
    "max_matching",
    "solve_biregular",
    "solve_exhaustive",
    "tilde",
]

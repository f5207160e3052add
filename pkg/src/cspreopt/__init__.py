"""Closest substring solvers: exact oracles, the r-sampling scheme, and
reoptimisation after sequences are added."""
from ._enum import InstanceTooLarge
from .exact import ExactResult, solve_exact_patterns, solve_exact_tuples
from .fileio import ParseError, parse_instance, parse_solution, serialize_instance, serialize_solution
from .generate import PlantedSpec, gen_planted, gen_random
from .model import (
    Alignment,
    CostedSolution,
    Instance,
    Occurrence,
    Solution,
    best_occurrence,
    consensus_of,
    decompose_cost,
    hamming,
    pattern_cost,
    realign,
    solution_cost,
    substring_at,
)
from .ptas import PtasResult, RatioParams, RSample, UnboundedRatio, enumerate_r_samples, ptas_solve, ratio_bound, sample_count
from .reduction import TPartiteGraph, build_graph, clique_weight, dump_edges, min_weight_clique
from .reopt import (
    ModifiedInstance,
    OptVerificationError,
    ReoptInput,
    ReoptResult,
    additive_gap,
    best_align,
    k_best_align,
    reopt_ptas,
)

__version__ = "0.1.0"

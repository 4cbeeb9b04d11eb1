"""Instrumented clause-tree CNF-SAT procedure with brute-force oracles."""

from .bounds import BoundsReport, BoundVerdict, apply_bounds, literal_count
from .families import gen_exhaustive, gen_fn, gen_random
from .formats import ParseError, emit_dimacs, emit_native, parse_dimacs, parse_native
from .formula import Clause, Formula, clause, evaluate_clause, evaluate_formula, formula, normalize_clause
from .oracle import (
    are_siblings,
    check_theorem_7_2,
    complete_formula,
    fully_populated_clauses,
    theorem_10_8_decide,
    truth_table_sat,
)
from .solver import SolveConfig, Verdict, extract_witness, kumar_solve
from .tree import NULL, OPEN, ClauseTree, Counters, ResourceLimitExceeded, new_tree

__version__ = "0.1.0"

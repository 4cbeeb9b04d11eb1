"""Brute-force ground truth.

Everything here is exponential on purpose and guarded by explicit variable
limits: going over a limit raises GuardError instead of silently truncating.
"""
from __future__ import annotations

from itertools import chain, combinations, product
from typing import Iterable

from .formula import Clause, Formula, evaluate_formula, falsifying_assignment
from .solver import Verdict

TRUTH_TABLE_LIMIT = 24
COMPLETE_FORMULA_LIMIT = 12
SIBLING_CHECK_LIMIT = 4


class GuardError(ValueError):
    pass


def _guard(variables, limit, what):
    if len(variables) > limit:
        raise GuardError(f"{what}: {len(variables)} variables exceeds limit of {limit}")


def assignments(variables: Iterable[int]):
    """All assignments by binary counting, lowest-numbered variable as least significant bit."""
    vs = sorted(variables)
    for bits in range(1 << len(vs)):
        yield {v: bool(bits >> k & 1) for k, v in enumerate(vs)}


def truth_table_sat(f: Formula) -> Verdict:
    _guard(f.variables, TRUTH_TABLE_LIMIT, "truth_table_sat")
    for a in assignments(f.variables):
        if evaluate_formula(f, a):
            return Verdict(True, "truth-table", a)
    return Verdict(False, "truth-table")


def count_models(f: Formula) -> int:
    _guard(f.variables, TRUTH_TABLE_LIMIT, "count_models")
    return sum(evaluate_formula(f, a) for a in assignments(f.variables))


def fully_populated_clauses(variables: Iterable[int]) -> list[Clause]:
    vs = sorted(variables)
    _guard(vs, TRUTH_TABLE_LIMIT, "fully_populated_clauses")
    return [Clause(signs) for signs in product(*[(-v, v) for v in vs])]


def is_fully_populated(c: Clause, variables: Iterable[int]) -> bool:
    return not c.tautology and c.variables == frozenset(variables)


def powerset(c: Clause) -> list[Clause]:
    lits = c.literals
    subsets = chain.from_iterable(combinations(lits, k) for k in range(len(lits) + 1))
    return [Clause(s) for s in subsets]


def theorem_10_8_decide(f: Formula) -> Verdict:
    """Satisfiable iff some fully populated clause has no subset among the clauses of ``f``.

    Tautology clauses are dropped first.  The witness falsifies the clause
    that was found.
    """
    _guard(f.variables, TRUTH_TABLE_LIMIT, "theorem_10_8_decide")
    sets = [c.as_set() for c in f.clauses if not c.tautology]
    if frozenset() in sets:
        return Verdict(False, "thm108", reason="null clause")
    for full in fully_populated_clauses(f.variables):
        s = full.as_set()
        if not any(e <= s for e in sets):
            return Verdict(True, "thm108", falsifying_assignment(full, f.variables))
    return Verdict(False, "thm108")


def complete_formula(variables: Iterable[int]) -> set[Clause]:
    """Union of the powersets of all fully populated clauses over ``variables``."""
    vs = sorted(variables)
    _guard(vs, COMPLETE_FORMULA_LIMIT, "complete_formula")
    out: set[Clause] = set()
    for full in fully_populated_clauses(vs):
        out.update(powerset(full))
    return out


def are_siblings(a: Clause, b: Clause, variables: Iterable[int]) -> bool:
    vs = frozenset(variables)
    return a != b and is_fully_populated(a, vs) and is_fully_populated(b, vs)


def check_theorem_7_2(variables: Iterable[int]) -> bool:
    """Exhaustively test the sibling-subclause property over ``variables``.

    For every sibling pair (C1, C2) and every D1 among the subsets of C1 that
    are not subsets of C2, some V' within ``variables`` and some subset D2 of
    C2 must make D1 and D2 siblings over V'.
    """
    vs = sorted(variables)
    _guard(vs, SIBLING_CHECK_LIMIT, "check_theorem_7_2")
    fulls = fully_populated_clauses(vs)
    var_subsets = [frozenset(s) for k in range(len(vs) + 1) for s in combinations(vs, k)]
    for c1, c2 in product(fulls, fulls):
        if not are_siblings(c1, c2, vs):
            continue
        below_c2 = powerset(c2)
        below_c2_set = set(below_c2)
        for d1 in powerset(c1):
            if d1 in below_c2_set:
                continue
            if not any(
                are_siblings(d1, d2, sub) for sub in var_subsets for d2 in below_c2
            ):
                return False
    return True


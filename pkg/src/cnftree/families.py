"""Formula generators: the F_n blowup family, seeded random formulas and
exhaustive small suites."""
from __future__ import annotations

import random
import warnings
from itertools import combinations, product
from typing import Iterator

from .formula import Clause, Formula

EXHAUSTIVE_MAX_VARS = 3
EXHAUSTIVE_MAX_CLAUSES = 4
RANDOM_MAX_VARS = 24


class NotInFamilyWarning(UserWarning):
    pass


def gen_fn(n: int) -> Formula:
    """The single clause {x1, ..., xn}.

    Family members need n > 1; n == 1 is allowed for testing but warns.
    """
    if n < 1:
        raise ValueError("F_n needs n >= 1")
    if n == 1:
        warnings.warn("F_1 is not a member of the counterexample family (requires n > 1)",
                      NotInFamilyWarning, stacklevel=2)
    return Formula.of([Clause(tuple(range(1, n + 1)))])


def in_family(f: Formula) -> bool:
    if len(f) != 1:
        return False
    lits = f.clauses[0].literals
    return len(lits) > 1 and lits == tuple(range(1, len(lits) + 1))


def gen_random(
    nvars: int,
    nclauses: int,
    width_range: tuple[int, int],
    seed,
    tautologies: bool = False,
) -> Formula:
    """Seeded random CNF.

    Width is uniform over ``width_range`` (inclusive), variables are drawn
    without replacement, polarity by fair coin.  With ``tautologies`` each
    clause of width >= 1 gets, with probability 1/4, the complement of one of
    its literals appended.  Duplicate clauses collapse, so the result may have
    fewer than ``nclauses`` clauses.
    """
    lo, hi = width_range
    if nvars < 0 or nvars > RANDOM_MAX_VARS:
        raise ValueError(f"nvars must be in 0..{RANDOM_MAX_VARS}")
    if lo < 0 or lo > hi:
        raise ValueError(f"bad width range {width_range}")
    if hi > nvars:
        raise ValueError(f"width {hi} exceeds {nvars} variables")
    rng = random.Random(seed)
    clauses = []
    for _ in range(nclauses):
        width = rng.randint(lo, hi)
        vs = rng.sample(range(1, nvars + 1), width)
        lits = [v if rng.random() < 0.5 else -v for v in vs]
        if tautologies and lits and rng.random() < 0.25:
            lits.append(-rng.choice(lits))
        clauses.append(lits)
    return Formula.of(clauses)


def clauses_over(nvars: int) -> list[Clause]:
    """Every non-tautology clause over x1..x_nvars, from sign-or-absent vectors."""
    out = []
    for signs in product((0, -1, 1), repeat=nvars):
        out.append(Clause(tuple(s * (i + 1) for i, s in enumerate(signs) if s)))
    return sorted(out, key=lambda c: (len(c), [(abs(l), l > 0) for l in c.literals]))


def gen_exhaustive(nvars: int, max_clauses: int) -> Iterator[Formula]:
    """All formulas of 1..max_clauses distinct non-tautology clauses over x1..x_nvars."""
    if not 0 <= nvars <= EXHAUSTIVE_MAX_VARS:
        raise ValueError(f"nvars must be in 0..{EXHAUSTIVE_MAX_VARS}")
    if not 0 <= max_clauses <= EXHAUSTIVE_MAX_CLAUSES:
        raise ValueError(f"max_clauses must be in 0..{EXHAUSTIVE_MAX_CLAUSES}")
    pool = clauses_over(nvars)
    for k in range(1, max_clauses + 1):
        for combo in combinations(pool, k):
            yield Formula.of(combo)

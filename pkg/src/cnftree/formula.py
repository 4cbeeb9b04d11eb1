"""CNF formulas with set semantics.

Literals are nonzero ints in the DIMACS convention: ``v`` is the positive
literal of variable ``v`` and ``-v`` its complement.  Clauses are kept in a
canonical order (ascending variable, negative literal first) so that equal
sets compare equal and serialize identically.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence, Union

Token = Union[int, bool]
Assignment = Mapping[int, bool]


def complement(lit: int) -> int:
    return -lit


def lit_key(lit: int) -> tuple[int, bool]:
    return (abs(lit), lit > 0)


def lit_name(lit: int) -> str:
    return f"x{lit}" if lit > 0 else f"~x{-lit}"


@dataclass(frozen=True)
class Clause:
    literals: tuple[int, ...]
    tautology: bool = False

    @property
    def variables(self) -> frozenset[int]:
        return frozenset(abs(l) for l in self.literals)

    @property
    def is_null(self) -> bool:
        return not self.literals and not self.tautology

    def as_set(self) -> frozenset[int]:
        return frozenset(self.literals)

    def __len__(self) -> int:
        return len(self.literals)

    def __iter__(self):
        return iter(self.literals)

    def __contains__(self, lit) -> bool:
        return lit in self.literals

    def __str__(self) -> str:
        body = ", ".join(lit_name(l) for l in self.literals)
        if self.tautology and not _has_complementary_pair(self.literals):
            body = f"{body}, true" if body else "true"
        return "{" + body + "}"


def _has_complementary_pair(lits: Iterable[int]) -> bool:
    s = set(lits)
    return any(-l in s for l in s)


def normalize_clause(raw: Iterable[Token]) -> Clause:
    """Build a canonical clause from literals and the constants True/False.

    ``False`` disjuncts are dropped, ``True`` or a complementary pair marks the
    clause as a tautology.  An empty result that is not a tautology is the
    null clause.
    """
    lits = set()
    taut = False
    for tok in raw:
        if isinstance(tok, bool):
            taut = taut or tok
            continue
        if not isinstance(tok, int) or tok == 0:
            raise ValueError(f"invalid literal token {tok!r}")
        lits.add(tok)
    taut = taut or _has_complementary_pair(lits)
    return Clause(tuple(sorted(lits, key=lit_key)), taut)


def clause(*lits: Token) -> Clause:
    return normalize_clause(lits)


@dataclass(frozen=True)
class Formula:
    """A set of clauses in input order.

    ``num_vars`` is the DIMACS header count, kept only so emission can
    reproduce it; it does not take part in equality.
    """

    clauses: tuple[Clause, ...]
    variables: frozenset[int] = field(compare=False)
    num_vars: int = field(default=0, compare=False)
    duplicates_dropped: int = field(default=0, compare=False)

    @classmethod
    def of(cls, clauses: Iterable[Clause | Sequence[Token]], num_vars: int = 0) -> "Formula":
        seen = set()
        kept = []
        dropped = 0
        for c in clauses:
            if not isinstance(c, Clause):
                c = normalize_clause(c)
            if c in seen:
                dropped += 1
                continue
            seen.add(c)
            kept.append(c)
        variables = frozenset().union(*(c.variables for c in kept))
        return cls(tuple(kept), variables, max(num_vars, max(variables, default=0)), dropped)

    def __len__(self) -> int:
        """Cardinality: number of distinct clauses."""
        return len(self.clauses)

    def __iter__(self):
        return iter(self.clauses)

    def without_tautologies(self) -> "Formula":
        return Formula.of([c for c in self.clauses if not c.tautology], self.num_vars)

    def __str__(self) -> str:
        return "{" + ", ".join(str(c) for c in self.clauses) + "}"


def formula(*clauses: Sequence[Token]) -> Formula:
    """Shorthand: ``formula([-1], [1, -2])``."""
    return Formula.of(clauses)


def evaluate_clause(c: Clause, a: Assignment) -> bool:
    missing = [abs(l) for l in c.literals if abs(l) not in a]
    if missing:
        raise ValueError(f"assignment does not define variables {sorted(set(missing))}")
    if c.tautology:
        return True
    return any(a[l] if l > 0 else not a[-l] for l in c.literals)


def evaluate_formula(f: Formula, a: Assignment) -> bool:
    missing = f.variables - a.keys()
    if missing:
        raise ValueError(f"assignment does not define variables {sorted(missing)}")
    return all(evaluate_clause(c, a) for c in f.clauses)


def falsifying_assignment(c: Clause, variables: Iterable[int] = ()) -> dict[int, bool]:
    """Assignment making every literal of ``c`` false; other variables default to False."""
    a = {v: False for v in variables}
    for l in c.literals:
        a[abs(l)] = l < 0
    return a

"""Counting bounds proposed as shortcuts for the clause-tree procedure.

With ``n = |V|`` and ``#(F, l)`` the number of clauses containing literal
``l``, for a tautology-free formula ``F``:

1. ``|F| > 3^n - 2^n`` means ``F`` is unsatisfiable.
2. ``min(#(F,x), #(F,~x)) > 3^(n-1) - 2^(n-1)`` for some ``x`` means unsatisfiable.
3. ``#(F,x) <= 3^(n-1) - 2^(n-1) < #(F,~x)`` forces ``x`` false.
4. ``#(F,~x) <= 3^(n-1) - 2^(n-1) < #(F,x)`` forces ``x`` true.

All arithmetic is on Python ints, so thresholds never overflow.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .formula import Formula


class BoundVerdict(enum.Enum):
    UNSAT_BY_BOUND1 = "UnsatByBound1"
    UNSAT_BY_BOUND2 = "UnsatByBound2"
    UNKNOWN = "Unknown"


@dataclass
class BoundsReport:
    verdict: BoundVerdict
    forced: dict[int, bool] = field(default_factory=dict)
    stats: dict[int, tuple[int, int]] = field(default_factory=dict)

    def record(self) -> dict[str, str]:
        forced = " ".join(f"x{v}={str(b).lower()}" for v, b in sorted(self.forced.items()))
        return {"verdict": self.verdict.value, "forced": forced}

    def to_text(self) -> str:
        lines = [f"{k}={v}" for k, v in self.record().items()]
        lines += [f"count_x{v}={p},{n}" for v, (p, n) in sorted(self.stats.items())]
        return "\n".join(lines) + "\n"

    def summary(self) -> str:
        if not self.forced:
            return f"{self.verdict.value}, no forced literals"
        forced = ", ".join(f"x{v}={str(b).lower()}" for v, b in sorted(self.forced.items()))
        return f"{self.verdict.value}, forced: {forced}"


def literal_count(f: Formula, lit: int) -> int:
    return sum(1 for c in f.clauses if lit in c.literals)


def cardinality_threshold(n: int) -> int:
    return 3**n - 2**n


def literal_threshold(n: int) -> int:
    return 3 ** (n - 1) - 2 ** (n - 1)


def apply_bounds(f: Formula) -> BoundsReport:
    if any(c.tautology for c in f.clauses):
        raise ValueError("apply_bounds expects a tautology-free formula")
    n = len(f.variables)
    stats = {v: (literal_count(f, v), literal_count(f, -v)) for v in sorted(f.variables)}
    if len(f) > cardinality_threshold(n):
        return BoundsReport(BoundVerdict.UNSAT_BY_BOUND1, {}, stats)
    if n == 0:
        return BoundsReport(BoundVerdict.UNKNOWN, {}, stats)
    t = literal_threshold(n)
    if any(min(pos, neg) > t for pos, neg in stats.values()):
        return BoundsReport(BoundVerdict.UNSAT_BY_BOUND2, {}, stats)
    forced = {}
    for v, (pos, neg) in stats.items():
        if pos <= t < neg:
            forced[v] = False
        elif neg <= t < pos:
            forced[v] = True
    return BoundsReport(BoundVerdict.UNKNOWN, forced, stats)

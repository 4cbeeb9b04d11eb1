"""Driver for the clause-tree decision procedure."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from .formula import Formula, falsifying_assignment
from .tree import ClauseTree, Counters, ResourceLimitExceeded, Snapshot

PER_CLAUSE = "per_clause"
POST_CONSTRUCTION = "post_construction"
SCHEDULES = (PER_CLAUSE, POST_CONSTRUCTION)

DEFAULT_NODE_LIMIT = 2**26

# on_event(kind, clause_index, tree); kind is "insert" or "prune"
EventHook = Callable[[str, int, ClauseTree], None]

__all__ = [
    "SolveConfig",
    "Verdict",
    "ResourceLimitExceeded",
    "kumar_solve",
    "extract_witness",
]


@dataclass(frozen=True)
class SolveConfig:
    schedule: str = PER_CLAUSE
    empty_formula_policy: str = "accept"
    node_limit: Optional[int] = DEFAULT_NODE_LIMIT

    def __post_init__(self):
        if self.schedule not in SCHEDULES:
            raise ValueError(f"unknown schedule {self.schedule!r}")
        if self.empty_formula_policy not in ("accept", "reject"):
            raise ValueError(f"unknown empty-formula policy {self.empty_formula_policy!r}")
        if self.node_limit is not None and self.node_limit < 1:
            raise ValueError("node_limit must be at least 1")


@dataclass
class Verdict:
    satisfiable: bool
    procedure: str
    witness: Optional[dict[int, bool]] = None
    counters: Optional[Counters] = None
    reason: str = ""
    tree: Optional[ClauseTree] = field(default=None, repr=False, compare=False)

    @property
    def label(self) -> str:
        return "SATISFIABLE" if self.satisfiable else "UNSATISFIABLE"

    def record(self) -> dict[str, object]:
        rec: dict[str, object] = {"result": self.label, "procedure": self.procedure}
        if self.reason:
            rec["reason"] = self.reason
        if self.counters is not None:
            rec.update(self.counters.record())
        return rec

    def to_text(self) -> str:
        return "".join(f"{k}={v}\n" for k, v in self.record().items())


def _reject(tree, reason):
    return Verdict(False, "kumar", None, tree.counters, reason, tree)


def kumar_solve(
    f: Formula,
    cfg: SolveConfig = SolveConfig(),
    on_event: Optional[EventHook] = None,
) -> Verdict:
    """Run the clause-tree procedure on ``f``.

    Raises ResourceLimitExceeded if the live node count would pass
    ``cfg.node_limit``.
    """
    tree = ClauseTree(cfg.node_limit)
    if not f.clauses and cfg.empty_formula_policy == "reject":
        return _reject(tree, "empty formula")

    def note(kind, i):
        if on_event is not None:
            on_event(kind, i, tree)

    def grow(i, c):
        # variables go in ascending index order
        for v in sorted(c.variables):
            if tree.contains(v):
                continue
            if not tree.has_open_pointer():
                return False
            tree.insert_variable(v)
        note("insert", i)
        return True

    def cut(i, c):
        before = tree.counters.prune_pointer_visits
        tree.prune(c)
        cnt = tree.counters
        cnt.per_clause_snapshots.append(
            Snapshot(i, cnt.peak_nodes_incl_root, cnt.current_nodes_incl_root,
                     cnt.prune_pointer_visits - before)
        )
        note("prune", i)

    work = []
    for i, c in enumerate(f.clauses, 1):
        if c.is_null:
            return _reject(tree, f"null clause at position {i}")
        if c.tautology:
            continue
        if not grow(i, c):
            return _reject(tree, f"no open pointer while processing clause {i}")
        if cfg.schedule == PER_CLAUSE:
            cut(i, c)
        else:
            work.append((i, c))
    for i, c in work:
        cut(i, c)

    if not tree.has_open_pointer():
        return _reject(tree, "no open pointer remains")
    witness = extract_witness(tree, f)
    return Verdict(True, "kumar", witness, tree.counters, "", tree)


def extract_witness(tree: ClauseTree, f: Formula) -> dict[int, bool]:
    """Falsify every literal of the first surviving path; unseen variables get False."""
    paths = tree.open_paths()
    if not paths:
        raise ValueError("tree has no open pointer")
    return falsifying_assignment(paths[0], sorted(f.variables))

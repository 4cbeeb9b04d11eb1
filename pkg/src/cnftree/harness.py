"""Benchmark sweeps over F_n and differential checks against the oracles."""
from __future__ import annotations

import csv
import random
import time
from dataclasses import dataclass, field
from typing import Iterable

from .families import gen_exhaustive, gen_fn, gen_random
from .formula import Formula, evaluate_formula
from .oracle import theorem_10_8_decide, truth_table_sat
from .solver import DEFAULT_NODE_LIMIT, PER_CLAUSE, SCHEDULES, SolveConfig, kumar_solve

BENCH_MAX_N = 22

CSV_COLUMNS = [
    "n",
    "peak_nodes_incl_root",
    "nodes_excl_root",
    "nodes_deleted",
    "prune_pointer_visits",
    "open_paths_final",
    "verdict",
    "wall_time_ns",
    "visits_ratio",
]


def bench_row(n: int, schedule: str = PER_CLAUSE, node_limit=DEFAULT_NODE_LIMIT) -> dict:
    f = gen_fn(n)
    t0 = time.perf_counter_ns()
    v = kumar_solve(f, SolveConfig(schedule=schedule, node_limit=node_limit))
    elapsed = time.perf_counter_ns() - t0
    c = v.counters
    return {
        "n": n,
        "peak_nodes_incl_root": c.peak_nodes_incl_root,
        "nodes_excl_root": c.current_nodes_excl_root,
        "nodes_deleted": c.nodes_deleted,
        "prune_pointer_visits": c.prune_pointer_visits,
        "open_paths_final": v.tree.open_pointer_count(),
        "verdict": v.label,
        "wall_time_ns": elapsed,
    }


def bench(n_min: int, n_max: int, schedule: str = PER_CLAUSE,
          node_limit=DEFAULT_NODE_LIMIT) -> list[dict]:
    if not 1 <= n_min <= n_max <= BENCH_MAX_N:
        raise ValueError(f"need 1 <= n_min <= n_max <= {BENCH_MAX_N}")
    rows = []
    prev = None
    for n in range(n_min, n_max + 1):
        row = bench_row(n, schedule, node_limit)
        visits = row["prune_pointer_visits"]
        row["visits_ratio"] = "" if prev is None else f"{visits / prev:.6f}"
        prev = visits
        rows.append(row)
    return rows


def write_csv(rows: list[dict], fh) -> None:
    w = csv.DictWriter(fh, fieldnames=CSV_COLUMNS, lineterminator="\n")
    w.writeheader()
    w.writerows(rows)


def exhaustive_suite(nvars: int = 3, max_clauses: int = 4) -> Iterable[Formula]:
    return gen_exhaustive(nvars, max_clauses)


def random_suite(samples: int, seed, max_vars: int = 4, max_clauses: int = 8) -> Iterable[Formula]:
    """``samples`` nonempty random formulas over at most ``max_vars`` variables."""
    rng = random.Random(seed)
    for _ in range(samples):
        nv = rng.randint(1, max_vars)
        nc = rng.randint(1, max_clauses)
        yield gen_random(nv, nc, (1, nv), rng.getrandbits(64))


@dataclass
class VerifyReport:
    checked: int = 0
    satisfiable: int = 0
    disagreements: list[tuple[str, dict[str, bool]]] = field(default_factory=list)
    bad_witnesses: list[tuple[str, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.disagreements and not self.bad_witnesses

    def to_text(self) -> str:
        lines = [
            f"checked={self.checked}",
            f"satisfiable={self.satisfiable}",
            f"unsatisfiable={self.checked - self.satisfiable}",
            f"disagreements={len(self.disagreements)}",
            f"bad_witnesses={len(self.bad_witnesses)}",
        ]
        for text, verdicts in sorted(self.disagreements, key=lambda d: d[0]):
            vs = " ".join(f"{k}={'SAT' if b else 'UNSAT'}" for k, b in verdicts.items())
            lines.append(f"disagreement {text} {vs}")
        for text, proc in sorted(self.bad_witnesses):
            lines.append(f"bad_witness {text} procedure={proc}")
        return "\n".join(lines) + "\n"


def decide_all(f: Formula, inject_fault: bool = False):
    """Run every decision procedure on ``f``; returns {name: Verdict}."""
    out = {}
    for schedule in SCHEDULES:
        out[f"kumar-{schedule}"] = kumar_solve(f, SolveConfig(schedule=schedule))
    out["truth-table"] = truth_table_sat(f)
    out["thm108"] = theorem_10_8_decide(f)
    if inject_fault and len(f) >= 2:
        # test-only: pretend the per-clause run got the answer wrong
        v = out[f"kumar-{PER_CLAUSE}"]
        v.satisfiable = not v.satisfiable
        v.witness = None
    return out


def verify(formulas: Iterable[Formula], inject_fault: bool = False) -> VerifyReport:
    rep = VerifyReport()
    for f in formulas:
        verdicts = decide_all(f, inject_fault)
        rep.checked += 1
        answers = {k: v.satisfiable for k, v in verdicts.items()}
        if len(set(answers.values())) != 1:
            rep.disagreements.append((str(f), answers))
        elif answers["truth-table"]:
            rep.satisfiable += 1
        for name, v in verdicts.items():
            if v.satisfiable and v.witness is not None and not evaluate_formula(f, v.witness):
                rep.bad_witnesses.append((str(f), name))
    return rep

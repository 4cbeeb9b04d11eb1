"""Command-line workbench.

Exit codes follow the SAT-solver convention for ``solve`` and ``trace``:
10 satisfiable, 20 unsatisfiable, 1 usage/parse error, 2 resource limit.
"""
from __future__ import annotations

import argparse
import logging
import os
import sys
from pathlib import Path

from . import harness
from .bounds import apply_bounds
from .families import gen_exhaustive, gen_fn, gen_random
from .formats import ParseError, read_formula, write_formula
from .oracle import GuardError, theorem_10_8_decide, truth_table_sat
from .solver import DEFAULT_NODE_LIMIT, SCHEDULES, ResourceLimitExceeded, SolveConfig, kumar_solve

EXIT_SAT = 10
EXIT_UNSAT = 20
EXIT_ERROR = 1
EXIT_LIMIT = 2

NODE_LIMIT_ENV = "CNFTREE_NODE_LIMIT"

log = logging.getLogger("cnftree")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _node_limit(args) -> int | None:
    if args.node_limit is not None:
        return args.node_limit or None
    env = os.environ.get(NODE_LIMIT_ENV)
    if env:
        return int(env) or None
    return DEFAULT_NODE_LIMIT


def _config(args) -> SolveConfig:
    return SolveConfig(
        schedule=args.schedule,
        empty_formula_policy=args.empty_policy,
        node_limit=_node_limit(args),
    )


def _print_verdict(v) -> int:
    print(f"s {v.label}")
    if v.witness is not None:
        lits = [str(x if b else -x) for x, b in sorted(v.witness.items())]
        print("v " + " ".join(lits + ["0"]))
        print("c witness " + " ".join(f"x{x}={str(b).lower()}" for x, b in sorted(v.witness.items())))
    if v.reason:
        print(f"c reason: {v.reason}")
    return EXIT_SAT if v.satisfiable else EXIT_UNSAT


def cmd_solve(args) -> int:
    f = read_formula(args.path)
    if args.algo == "kumar":
        v = kumar_solve(f, _config(args))
    elif args.algo == "truth-table":
        v = truth_table_sat(f)
    else:
        v = theorem_10_8_decide(f)
    if args.stats:
        Path(args.stats).write_text(v.to_text(), encoding="utf-8")
    return _print_verdict(v)


def cmd_trace(args) -> int:
    f = read_formula(args.path)
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    frames = []

    def on_event(kind, i, tree):
        frames.append(f"{len(frames) + 1:03d}-{kind}-clause{i}.dot")
        (out / frames[-1]).write_text(tree.export_dot(), encoding="utf-8")

    v = kumar_solve(f, _config(args), on_event=on_event)
    (out / "final.dot").write_text(v.tree.export_dot(), encoding="utf-8")
    for name in frames:
        print(f"c frame {name}")
    return _print_verdict(v)


def cmd_bench(args) -> int:
    rows = harness.bench(args.n_min, args.n_max, args.schedule, _node_limit(args))
    if args.csv in (None, "-"):
        harness.write_csv(rows, sys.stdout)
    else:
        with open(args.csv, "w", newline="", encoding="utf-8") as fh:
            harness.write_csv(rows, fh)
    return 0


def cmd_verify(args) -> int:
    if args.mode == "exhaustive":
        suite = harness.exhaustive_suite()
    else:
        if not 1 <= args.nvars <= 4:
            raise GuardError("random verification needs 1 <= nvars <= 4")
        suite = harness.random_suite(args.samples, args.seed, args.nvars)
    rep = harness.verify(suite, inject_fault=args.inject_fault)
    text = rep.to_text()
    if args.report:
        Path(args.report).write_text(text, encoding="utf-8")
    sys.stdout.write(text)
    return 0 if rep.ok else 1


def cmd_bounds(args) -> int:
    f = read_formula(args.path)
    stripped = f.without_tautologies()
    if len(stripped) != len(f):
        print(f"c dropped {len(f) - len(stripped)} tautology clause(s)")
    rep = apply_bounds(stripped)
    print(rep.summary())
    sys.stdout.write(rep.to_text())
    return 0


def cmd_gen(args) -> int:
    if args.family == "fn":
        if args.n is None:
            raise GuardError("--n is required for --family fn")
        write_formula(gen_fn(args.n), args.out)
    elif args.family == "random":
        f = gen_random(args.nvars, args.nclauses, (args.min_width, args.max_width),
                       args.seed, tautologies=args.tautologies)
        write_formula(f, args.out)
    else:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        count = 0
        for count, f in enumerate(gen_exhaustive(args.nvars, args.max_clauses), 1):
            write_formula(f, out / f"f{count:05d}.{args.format}")
        print(f"c wrote {count} formulas to {out}")
    return 0


def _add_solver_opts(p):
    p.add_argument("--schedule", choices=SCHEDULES, default="per_clause")
    p.add_argument("--empty-policy", choices=("accept", "reject"), default="accept")
    p.add_argument("--node-limit", type=int, default=None,
                   help=f"live node cap (0 disables; default ${NODE_LIMIT_ENV} or 2^26)")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="cnftree", description="Clause-tree SAT workbench")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", help="decide a .cnf (DIMACS) or .scnf (native) file")
    p.add_argument("path")
    p.add_argument("--algo", choices=("kumar", "truth-table", "thm108"), default="kumar")
    p.add_argument("--stats", metavar="FILE", help="write key=value counters here")
    _add_solver_opts(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("trace", help="write one DOT frame per insert/prune event")
    p.add_argument("path")
    p.add_argument("out_dir")
    _add_solver_opts(p)
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("bench", help="counter sweep over the F_n family, as CSV")
    p.add_argument("--family", choices=("fn",), default="fn")
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--n-max", type=int, default=18)
    p.add_argument("--csv", metavar="PATH", help="output file (default stdout)")
    _add_solver_opts(p)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("verify", help="differential check against the brute-force oracles")
    p.add_argument("--mode", choices=("exhaustive", "random"), default="exhaustive")
    p.add_argument("--nvars", type=int, default=4)
    p.add_argument("--samples", type=int, default=10000)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--report", metavar="PATH")
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", help="apply the counting bounds to a formula")
    p.add_argument("path")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("gen", help="generate formula files")
    p.add_argument("--family", choices=("fn", "random", "exhaustive"), required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--nvars", type=int, default=3)
    p.add_argument("--nclauses", type=int, default=4)
    p.add_argument("--min-width", type=int, default=1)
    p.add_argument("--max-width", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tautologies", action="store_true")
    p.add_argument("--max-clauses", type=int, default=2)
    p.add_argument("--format", choices=("cnf", "scnf"), default="cnf",
                   help="file extension for --family exhaustive")
    p.add_argument("--out", required=True, help="file (directory for exhaustive)")
    p.set_defaults(func=cmd_gen)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except ResourceLimitExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_LIMIT
    except (ParseError, GuardError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())

"""DIMACS CNF and the native set-based format (``.scnf``).

Native format: one clause per line, tokens are signed integers, ``#t`` or
``#f``; a blank line is the null clause.  It exists because DIMACS has no way
to write the constants true/false inside a clause.
"""
from __future__ import annotations

import logging
import re
from pathlib import Path

from .formula import Clause, Formula, normalize_clause

log = logging.getLogger(__name__)


class ParseError(ValueError):
    def __init__(self, msg: str, line: int, column: int | None = None):
        self.line = line
        self.column = column
        where = f"line {line}" if column is None else f"line {line}, column {column}"
        super().__init__(f"{where}: {msg}")


def _warn_duplicates(f: Formula, source: str) -> None:
    if f.duplicates_dropped:
        log.warning("%s: collapsed %d duplicate clause(s)", source, f.duplicates_dropped)


def parse_dimacs(text: str) -> Formula:
    nvars = nclauses = None
    clauses = []
    current: list[int] = []
    current_start = 0
    lineno = 0
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("c"):
            continue
        if stripped.startswith("p"):
            if nvars is not None:
                raise ParseError("duplicate problem line", lineno)
            parts = stripped.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ParseError(f"malformed header {stripped!r}", lineno)
            try:
                nvars, nclauses = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError(f"malformed header {stripped!r}", lineno) from None
            if nvars < 0 or nclauses < 0:
                raise ParseError("negative counts in header", lineno)
            continue
        if nvars is None:
            raise ParseError("clause before 'p cnf' header", lineno)
        for tok in stripped.split():
            try:
                lit = int(tok)
            except ValueError:
                raise ParseError(f"bad token {tok!r}", lineno) from None
            if lit == 0:
                clauses.append(current)
                current = []
                continue
            if abs(lit) > nvars:
                raise ParseError(f"literal {lit} exceeds declared {nvars} variables", lineno)
            if not current:
                current_start = lineno
            current.append(lit)
    if nvars is None:
        raise ParseError("missing 'p cnf' header", lineno)
    if current:
        raise ParseError("clause not terminated by 0", current_start)
    if len(clauses) != nclauses:
        raise ParseError(f"header declares {nclauses} clauses, found {len(clauses)}", lineno)
    f = Formula.of((normalize_clause(c) for c in clauses), num_vars=nvars)
    _warn_duplicates(f, "dimacs")
    return f


def emit_dimacs(f: Formula) -> str:
    out = [f"p cnf {f.num_vars} {len(f)}"]
    for c in f.clauses:
        if c.tautology and not _pair(c):
            raise ValueError(f"clause {c} uses the constant true; not expressible in DIMACS")
        out.append(" ".join([*map(str, c.literals), "0"]))
    return "\n".join(out) + "\n"


def _pair(c: Clause) -> bool:
    s = c.as_set()
    return any(-l in s for l in s)


def parse_native(text: str) -> Formula:
    clauses = []
    for lineno, line in enumerate(text.splitlines(), 1):
        toks = []
        for m in re.finditer(r"\S+", line):
            tok, col = m.group(), m.start() + 1
            if tok == "#t":
                toks.append(True)
            elif tok == "#f":
                toks.append(False)
            else:
                try:
                    lit = int(tok)
                except ValueError:
                    raise ParseError(f"bad token {tok!r}", lineno, col) from None
                if lit == 0:
                    raise ParseError("0 is not a literal", lineno, col)
                toks.append(lit)
        clauses.append(normalize_clause(toks))
    f = Formula.of(clauses)
    _warn_duplicates(f, "native")
    return f


def emit_native(f: Formula) -> str:
    lines = []
    for c in f.clauses:
        toks = [str(l) for l in c.literals]
        if c.tautology and not _pair(c):
            toks.append("#t")
        lines.append(" ".join(toks))
    return "".join(line + "\n" for line in lines)


def read_formula(path) -> Formula:
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    if path.suffix == ".scnf":
        return parse_native(text)
    return parse_dimacs(text)


def write_formula(f: Formula, path) -> None:
    path = Path(path)
    text = emit_native(f) if path.suffix == ".scnf" else emit_dimacs(f)
    path.write_text(text, encoding="utf-8")

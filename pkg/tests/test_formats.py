import logging

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cnftree.families import gen_fn
from cnftree.formats import (
    ParseError,
    emit_dimacs,
    emit_native,
    parse_dimacs,
    parse_native,
    read_formula,
    write_formula,
)
from cnftree.formula import Clause, formula

FIG1 = formula([-1], [1, -2])


def test_parse_dimacs_fig1():
    f = parse_dimacs("p cnf 2 2\n-1 0\n1 -2 0\n")
    assert f == FIG1
    assert f.clauses == (Clause((-1,)), Clause((1, -2)))


def test_parse_dimacs_single():
    assert parse_dimacs("p cnf 1 1\n1 0\n") == formula([1])


def test_parse_dimacs_comments_and_multiline_clause():
    text = "c hello\nc world\np cnf 3 2\n1 2\n3 0 -1\n0\n"
    assert parse_dimacs(text) == formula([1, 2, 3], [-1])


@pytest.mark.parametrize(
    "text, line",
    [
        ("p cnf x 1\n1 0\n", 1),
        ("p dnf 1 1\n1 0\n", 1),
        ("1 0\n", 1),
        ("p cnf 1 1\n2 0\n", 2),
        ("p cnf 2 1\n1 2\n", 2),
        ("p cnf 2 2\n1 0\n", 2),
        ("c only\n", 1),
        ("p cnf 2 1\n1 a 0\n", 2),
    ],
)
def test_parse_dimacs_errors_carry_line(text, line):
    with pytest.raises(ParseError) as exc:
        parse_dimacs(text)
    assert exc.value.line == line
    assert f"line {line}" in str(exc.value)


def test_dimacs_duplicates_collapse_with_warning(caplog):
    with caplog.at_level(logging.WARNING):
        f = parse_dimacs("p cnf 2 3\n1 2 0\n2 1 0\n-1 0\n")
    assert len(f) == 2 and f.duplicates_dropped == 1
    assert "duplicate" in caplog.text


def test_native_examples():
    f = parse_native("1 #t\n")
    assert len(f) == 1 and f.clauses[0].tautology
    assert parse_native("\n") == formula([])
    assert parse_native("-1\n1 -2\n") == FIG1
    assert parse_native("#f 2\n") == formula([2])
    assert len(parse_native("")) == 0


def test_native_error_position():
    with pytest.raises(ParseError) as exc:
        parse_native("1 2\n3  foo\n")
    assert (exc.value.line, exc.value.column) == (2, 4)
    with pytest.raises(ParseError):
        parse_native("1 0\n")


@pytest.mark.parametrize(
    "text",
    ["p cnf 2 2\n-1 0\n1 -2 0\n", "p cnf 1 1\n1 0\n", "p cnf 3 1\n1 2 3 0\n", "p cnf 5 1\n2 0\n"],
)
def test_dimacs_roundtrip_bytes(text):
    assert emit_dimacs(parse_dimacs(text)) == text
    once = emit_dimacs(parse_dimacs(text))
    assert emit_dimacs(parse_dimacs(once)) == once


@pytest.mark.parametrize("text", ["-1\n1 -2\n", "1 2 3\n", "\n", "1 #t\n-1 1\n2\n"])
def test_native_roundtrip_bytes(text):
    assert emit_native(parse_native(text)) == text


def test_emit_dimacs_refuses_constant_true():
    with pytest.raises(ValueError):
        emit_dimacs(parse_native("1 #t\n"))


def test_emit_gen_fn():
    assert emit_dimacs(gen_fn(3)) == "p cnf 3 1\n1 2 3 0\n"


clause_lists = st.lists(
    st.lists(st.integers(1, 6).flatmap(lambda v: st.sampled_from([v, -v])), max_size=5),
    max_size=6,
)


@given(clause_lists)
def test_roundtrips_preserve_formula(raw):
    f = formula(*raw)
    assert parse_dimacs(emit_dimacs(f)) == f
    assert parse_native(emit_native(f)) == f


def test_read_write_by_extension(tmp_path):
    for name in ("a.cnf", "a.scnf"):
        write_formula(FIG1, tmp_path / name)
        assert read_formula(tmp_path / name) == FIG1
    assert (tmp_path / "a.scnf").read_text() == "-1\n1 -2\n"

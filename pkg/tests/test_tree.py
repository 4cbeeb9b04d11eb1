from itertools import combinations, product

import pytest

from cnftree.families import clauses_over
from cnftree.formula import Clause, formula
from cnftree.solver import kumar_solve
from cnftree.tree import NULL, OPEN, ClauseTree, ResourceLimitExceeded, new_tree


def fresh(n):
    t = new_tree()
    for v in range(1, n + 1):
        t.insert_variable(v)
    return t


def test_new_tree():
    t = new_tree()
    assert t.node_count() == 1
    assert t.node_count(incl_root=False) == 0
    assert t.open_pointer_count() == 1
    assert t.pointer_count() == 1
    assert t.open_paths() == [Clause(())]
    c = t.counters
    assert (c.current_nodes_incl_root, c.peak_nodes_incl_root, c.nodes_created) == (1, 1, 0)


def test_insert_examples():
    t = new_tree()
    assert t.insert_variable(1) == 1
    assert t.node_count() == 2 and t.open_pointer_count() == 2
    assert t.shape() == (1, OPEN, OPEN)
    t.insert_variable(2)
    assert t.node_count() == 4 and t.open_pointer_count() == 4


@pytest.mark.parametrize("k", range(11))
def test_unpruned_growth(k):
    t = fresh(k)
    assert t.open_pointer_count() == 2**k
    assert t.node_count() == 2**k
    assert t.counters.peak_nodes_incl_root == 2**k
    assert t.counters.nodes_created == 2**k - 1


@pytest.mark.parametrize("n", [1, 5, 12, 18])
def test_pointer_count_identity(n):
    t = fresh(n)
    assert t.pointer_count() == 1 + 2 * t.node_count(incl_root=False) == 2 ** (n + 1) - 1


def test_insert_contract_violations():
    t = fresh(1)
    with pytest.raises(ValueError):
        t.insert_variable(1)
    t.prune(Clause((-1,)))
    t.prune(Clause((1,)))
    with pytest.raises(ValueError):
        t.insert_variable(2)


def test_prune_fig1_first_clause():
    t = fresh(1)
    visits = t.prune(Clause((-1,)))
    assert t.shape() == (1, NULL, OPEN)
    # root pointer, left, right
    assert visits == 3
    # the left pointer was still open: nothing below it to delete
    assert t.counters.nodes_deleted == 0


def test_prune_deletes_subtree():
    t = fresh(2)
    t.prune(Clause((-1,)))
    assert t.shape() == (1, NULL, (2, OPEN, OPEN))
    assert t.counters.nodes_deleted == 1
    assert t.counters.current_nodes_incl_root == 3
    assert t.counters.peak_nodes_incl_root == 4


@pytest.mark.parametrize("n", range(1, 13))
def test_prune_full_clause_on_fresh_tree(n):
    t = fresh(n)
    c = Clause(tuple(range(1, n + 1)))
    before = t.open_pointer_count()
    visits = t.prune(c)
    assert visits == 2 ** (n + 1) - 1
    assert t.counters.nodes_deleted == 0
    assert t.open_pointer_count() == before - 1
    assert c not in t.open_paths()


def test_prune_already_null_is_noop_on_state():
    t = fresh(2)
    t.prune(Clause((1, -2)))
    shape = t.shape()
    visits = t.prune(Clause((1, -2)))
    assert t.shape() == shape
    assert visits == t.pointer_count()


def test_prune_contract_violations():
    t = fresh(1)
    with pytest.raises(ValueError):
        t.prune(Clause((2,)))
    with pytest.raises(ValueError):
        t.prune(Clause(()))
    with pytest.raises(ValueError):
        t.prune(Clause((-1, 1), True))


def surviving_by_enumeration(clauses, nvars):
    """Fully populated clauses over x1..xn with no subset in ``clauses``."""
    sets = [c.as_set() for c in clauses]
    out = []
    for signs in product((-1, 1), repeat=nvars):
        full = frozenset(s * (i + 1) for i, s in enumerate(signs))
        if not any(s <= full for s in sets):
            out.append(full)
    return out


def test_open_paths_fig1():
    v = kumar_solve(formula([-1], [1, -2]))
    assert v.tree.open_paths() == [Clause((1, 2))]


def test_open_paths_fn3():
    v = kumar_solve(formula([1, 2, 3]))
    paths = v.tree.open_paths()
    expected = surviving_by_enumeration([Clause((1, 2, 3))], 3)
    assert len(expected) == 7
    assert {p.as_set() for p in paths} == set(expected)


def small_formulas():
    pool = [c for c in clauses_over(3) if c.literals]
    for k in range(1, 4):
        yield from combinations(pool, k)


def test_path_clause_soundness_exhaustive():
    """Open paths survive iff no pruned clause is a subset, all formulas <= 3 vars, <= 3 clauses."""
    for clauses in small_formulas():
        t = ClauseTree()
        processed = []
        for c in clauses:
            new_vars = [v for v in sorted(c.variables) if not t.contains(v)]
            if new_vars and not t.has_open_pointer():
                break
            for v in new_vars:
                t.insert_variable(v)
            opens_before = t.open_pointer_count()
            t.prune(c)
            processed.append(c)
            assert t.open_pointer_count() <= opens_before
            for p in t.open_paths():
                assert not any(q.as_set() <= p.as_set() for q in processed)
        # the frontier is exactly what enumeration over the inserted variables predicts
        relabeled = [Clause(tuple(_relabel(l, t.inserted) for l in c.literals)) for c in processed]
        expected = surviving_by_enumeration(relabeled, len(t.inserted))
        got = {frozenset(_relabel(l, t.inserted) for l in p.literals) for p in t.open_paths()}
        assert got == set(expected)


def _relabel(lit, order):
    i = order.index(abs(lit)) + 1
    return i if lit > 0 else -i


def test_resource_limit():
    t = ClauseTree(node_limit=8)
    for v in (1, 2, 3):
        t.insert_variable(v)
    with pytest.raises(ResourceLimitExceeded) as exc:
        t.insert_variable(4)
    assert exc.value.counters.current_nodes_incl_root == 8
    assert 4 not in t.inserted


def test_determinism():
    f = formula([-1, 3], [2, -3], [1, 2, 3], [-2])
    a, b = kumar_solve(f), kumar_solve(f)
    assert a.tree.export_dot() == b.tree.export_dot()
    assert a.counters == b.counters
    assert a.tree.shape() == b.tree.shape()


def test_dot_empty_tree(fixtures):
    assert new_tree().export_dot() == (fixtures / "empty_tree.dot").read_text()


def test_dot_fig1_panels(fixtures):
    t = fresh(1)
    assert t.export_dot() == (fixtures / "fig1a.dot").read_text()
    t.prune(Clause((-1,)))
    assert t.export_dot() == (fixtures / "fig1b.dot").read_text()
    t.insert_variable(2)
    assert t.export_dot() == (fixtures / "fig1c.dot").read_text()
    t.prune(Clause((1, -2)))
    assert t.export_dot() == (fixtures / "fig1d.dot").read_text()


def test_counter_record_is_flat():
    rec = fresh(3).counters.record()
    assert rec["peak_nodes_incl_root"] == 8
    assert rec["peak_nodes_excl_root"] == 7
    assert all(isinstance(v, int) for v in rec.values())

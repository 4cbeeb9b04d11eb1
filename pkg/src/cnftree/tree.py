"""The clause tree: a binary trie over variables in insertion order.

Every node at depth ``d`` carries the ``d``-th inserted variable.  The left
pointer of a node labeled ``x`` stands for the literal ``~x``, the right one
for ``x``; a root-to-pointer path therefore spells out a clause.  A pointer is
OPEN (a child may still be attached), NULL (closed for good) or a child node.
"""
from __future__ import annotations

import enum
from dataclasses import asdict, dataclass, field

from .formula import Clause, lit_key, lit_name


class Ptr(enum.Enum):
    OPEN = "open"
    NULL = "null"

    def __repr__(self):
        return self.name


OPEN = Ptr.OPEN
NULL = Ptr.NULL


class Node:
    __slots__ = ("label", "left", "right")

    def __init__(self, label: int):
        self.label = label
        self.left = OPEN
        self.right = OPEN


class Root:
    """The root has a single pointer and no label."""

    __slots__ = ("child",)

    def __init__(self):
        self.child = OPEN


class ResourceLimitExceeded(RuntimeError):
    def __init__(self, limit: int, counters: "Counters"):
        self.limit = limit
        self.counters = counters
        super().__init__(
            f"live node count would exceed limit {limit} "
            f"(currently {counters.current_nodes_incl_root})"
        )


@dataclass
class Snapshot:
    clause_index: int
    peak: int
    current: int
    visits_delta: int


@dataclass
class Counters:
    nodes_created: int = 0
    nodes_deleted: int = 0
    peak_nodes_incl_root: int = 1
    current_nodes_incl_root: int = 1
    prune_pointer_visits: int = 0
    per_clause_snapshots: list[Snapshot] = field(default_factory=list)

    @property
    def current_nodes_excl_root(self) -> int:
        return self.current_nodes_incl_root - 1

    @property
    def peak_nodes_excl_root(self) -> int:
        return self.peak_nodes_incl_root - 1

    def record(self) -> dict[str, int]:
        """Flat scalar view, suitable for key=value files and CSV rows."""
        d = asdict(self)
        del d["per_clause_snapshots"]
        d["current_nodes_excl_root"] = self.current_nodes_excl_root
        d["peak_nodes_excl_root"] = self.peak_nodes_excl_root
        return d


class ClauseTree:
    def __init__(self, node_limit: int | None = None):
        if node_limit is not None and node_limit < 1:
            raise ValueError("node_limit must be at least 1")
        self.root = Root()
        self.inserted: list[int] = []
        self.counters = Counters()
        self.node_limit = node_limit

    # -- traversal helpers -------------------------------------------------

    def _pointers(self):
        """Yield (owner, attr, state, path literals) for every pointer, DFS left first."""
        stack = [(self.root, "child", ())]
        while stack:
            owner, attr, path = stack.pop()
            state = getattr(owner, attr)
            yield owner, attr, state, path
            if isinstance(state, Node):
                x = state.label
                stack.append((state, "right", path + (x,)))
                stack.append((state, "left", path + (-x,)))

    def _open_pointers(self):
        return [(o, a) for o, a, s, _ in self._pointers() if s is OPEN]

    def contains(self, v: int) -> bool:
        return v in self.inserted

    def node_count(self, incl_root: bool = True) -> int:
        n = sum(1 for *_, s, _ in self._pointers() if isinstance(s, Node))
        return n + 1 if incl_root else n

    def pointer_count(self) -> int:
        return sum(1 for _ in self._pointers())

    def open_pointer_count(self) -> int:
        return len(self._open_pointers())

    def has_open_pointer(self) -> bool:
        return any(s is OPEN for *_, s, _ in self._pointers())

    # -- Algorithm 1 steps -------------------------------------------------

    def insert_variable(self, v: int) -> int:
        """Hang a fresh node labeled ``v`` on every OPEN pointer.

        Returns the number of nodes created.
        """
        if v < 1:
            raise ValueError(f"not a variable: {v}")
        if v in self.inserted:
            raise ValueError(f"variable {v} already in tree")
        frontier = self._open_pointers()
        if not frontier:
            raise ValueError("no open pointer to extend")
        c = self.counters
        if self.node_limit is not None and c.current_nodes_incl_root + len(frontier) > self.node_limit:
            raise ResourceLimitExceeded(self.node_limit, c)
        for owner, attr in frontier:
            setattr(owner, attr, Node(v))
        self.inserted.append(v)
        c.nodes_created += len(frontier)
        c.current_nodes_incl_root += len(frontier)
        c.peak_nodes_incl_root = max(c.peak_nodes_incl_root, c.current_nodes_incl_root)
        return len(frontier)

    def prune(self, c: Clause) -> int:
        """Null out every pointer whose path clause is a superset of ``c``.

        Walks all pointers depth first, left before right, never entering a
        NULL pointer or a subtree removed during this walk.  Returns the
        number of pointers visited.
        """
        if c.tautology or not c.literals:
            raise ValueError("prune needs a non-null, non-tautology clause")
        missing = c.variables - set(self.inserted)
        if missing:
            raise ValueError(f"clause variables {sorted(missing)} not in tree")
        target = c.as_set()
        need = len(target)
        visits = 0
        deleted = 0
        # (owner, attr, literal on this pointer, matched literals so far)
        stack = [(self.root, "child", 0, 0)]
        while stack:
            owner, attr, lit, matched = stack.pop()
            visits += 1
            if lit in target:
                matched += 1
            state = getattr(owner, attr)
            if matched == need:
                if state is not NULL:
                    if isinstance(state, Node):
                        deleted += _subtree_size(state)
                    setattr(owner, attr, NULL)
                continue
            if isinstance(state, Node):
                x = state.label
                stack.append((state, "right", x, matched))
                stack.append((state, "left", -x, matched))
        cnt = self.counters
        cnt.prune_pointer_visits += visits
        cnt.nodes_deleted += deleted
        cnt.current_nodes_incl_root -= deleted
        return visits

    # -- views -------------------------------------------------------------

    def open_paths(self) -> list[Clause]:
        paths = [p for *_, s, p in self._pointers() if s is OPEN]
        clauses = [Clause(tuple(sorted(p, key=lit_key))) for p in paths]
        return sorted(clauses, key=clause_sort_key)

    def shape(self):
        """Nested-tuple picture of the tree, e.g. ``(1, NULL, (2, NULL, OPEN))``."""

        def walk(state):
            if isinstance(state, Node):
                return (state.label, walk(state.left), walk(state.right))
            return state

        return walk(self.root.child)

    def export_dot(self) -> str:
        lines = ["digraph clause_tree {", '  root [label="root", shape=point];']
        edges = []
        ids = {"n": 0, "open": 0, "null": 0}

        def fresh(kind):
            ids[kind] += 1
            return f"{kind}{ids[kind]}"

        def emit(parent, state, edge_label):
            if isinstance(state, Node):
                name = fresh("n")
                lines.append(f'  {name} [label="x{state.label}", shape=circle];')
            elif state is OPEN:
                name = fresh("open")
                lines.append(f'  {name} [label="open", shape=none];')
            else:
                name = fresh("null")
                lines.append(f'  {name} [label="null", shape=box];')
            attr = f' [label="{edge_label}"]' if edge_label else ""
            edges.append(f"  {parent} -> {name}{attr};")
            if isinstance(state, Node):
                emit(name, state.left, lit_name(-state.label))
                emit(name, state.right, lit_name(state.label))

        emit("root", self.root.child, "")
        return "\n".join(lines + edges + ["}"]) + "\n"


def clause_sort_key(c: Clause):
    return tuple(lit_key(l) for l in c.literals)


def _subtree_size(node: Node) -> int:
    n = 0
    stack = [node]
    while stack:
        cur = stack.pop()
        n += 1
        for child in (cur.left, cur.right):
            if isinstance(child, Node):
                stack.append(child)
    return n


def new_tree(node_limit: int | None = None) -> ClauseTree:
    return ClauseTree(node_limit)

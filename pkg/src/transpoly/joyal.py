"""Joyal-style bijection between functional digraphs and marked rooted trees.

Vertices are tagged tuples ``("s", i)`` for sources and ``("t", j)`` for
destinations.  Both classes are stored as parent maps: every vertex except the
root destination ``ROOT = ("t", 0)`` has exactly one out-neighbour.

    S_d: sources have in-degree d(mu); every vertex but ROOT has out-degree 1.
    R_d: trees of T_d oriented towards ROOT, with one marked destination.

``phi`` opens the cycle of every non-root component at its largest source and
chains the components; ``psi`` undoes this by cutting the root-to-mark path at
its left-to-right maxima.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Mapping

from .degree_core import (
    DEFAULT_ENUMERATION_LIMIT,
    BipartiteTree,
    DegreeFunction,
    InstanceTooLarge,
    count_trees,
    iter_trees,
    make_tree,
    tree_violation,
)
from .errors import StructuralError

Node = tuple[str, int]
ROOT: Node = ("t", 0)


def src(i: int) -> Node:
    return ("s", i)


def dst(j: int) -> Node:
    return ("t", j)


def _freeze(parent: Mapping[Node, Node]) -> tuple[tuple[Node, Node], ...]:
    return tuple(sorted(parent.items()))


@dataclass(frozen=True)
class FunctionalDigraph:
    arcs: tuple[tuple[Node, Node], ...]  # sorted (tail, head) pairs
    df: DegreeFunction

    @property
    def parent(self) -> dict[Node, Node]:
        return dict(self.arcs)


@dataclass(frozen=True)
class MarkedRootedTree:
    arcs: tuple[tuple[Node, Node], ...]
    mark: int
    df: DegreeFunction

    @property
    def parent(self) -> dict[Node, Node]:
        return dict(self.arcs)

    def underlying(self) -> BipartiteTree:
        edges = [(a[1], b[1]) if a[0] == "s" else (b[1], a[1]) for a, b in self.arcs]
        return make_tree(self.df, edges)


def _all_nodes(df: DegreeFunction) -> list[Node]:
    return [src(i) for i in range(df.m)] + [dst(j) for j in range(df.n)]


def _check_parent_shape(df: DegreeFunction, parent: Mapping[Node, Node]) -> None:
    expected = set(_all_nodes(df)) - {ROOT}
    if set(parent) != expected:
        missing = sorted(expected - set(parent))
        extra = sorted(set(parent) - expected)
        raise StructuralError(f"out-degree mismatch: missing {missing}, unexpected {extra}")
    for tail, head in parent.items():
        if head not in expected and head != ROOT:
            raise StructuralError(f"arc {tail}->{head} leaves the vertex set")
        if tail[0] == head[0]:
            raise StructuralError(f"arc {tail}->{head} is not bipartite")


def check_functional(S: FunctionalDigraph) -> None:
    df = S.df
    parent = S.parent
    if len(parent) != len(S.arcs):
        raise StructuralError("a vertex has out-degree greater than 1")
    _check_parent_shape(df, parent)
    indeg = [0] * df.m
    for tail, head in parent.items():
        if head[0] == "s":
            indeg[head[1]] += 1
    for i, d in enumerate(df.degrees):
        if indeg[i] != d:
            raise StructuralError(f"source {i} has in-degree {indeg[i]}, expected {d}")


def _reaches_root(parent: Mapping[Node, Node], start: Node, limit: int) -> bool:
    v = start
    for _ in range(limit + 1):
        if v == ROOT:
            return True
        v = parent[v]
    return False


def check_marked(R: MarkedRootedTree) -> None:
    df = R.df
    parent = R.parent
    if len(parent) != len(R.arcs):
        raise StructuralError("a vertex has out-degree greater than 1")
    _check_parent_shape(df, parent)
    if not 0 <= R.mark < df.n:
        raise StructuralError(f"mark {R.mark} out of range")
    size = df.m + df.n
    for v in parent:
        if not _reaches_root(parent, v, size):
            raise StructuralError(f"vertex {v} does not reach the root")
    edges = [(a[1], b[1]) if a[0] == "s" else (b[1], a[1]) for a, b in R.arcs]
    problem = tree_violation(df, edges)
    if problem is not None:
        raise StructuralError(f"underlying graph not in T_d: {problem}")


def _guard(df: DegreeFunction, limit: int | None, size: int) -> None:
    if limit is not None and size > limit:
        raise InstanceTooLarge("enumeration", size, limit)


def count_functional_digraphs(df: DegreeFunction) -> int:
    return df.n * count_trees(df)


def _distribute(pool: tuple[int, ...], degrees: tuple[int, ...]) -> Iterator[list[tuple[int, ...]]]:
    """Split ``pool`` into consecutive blocks of the given sizes, in every way."""
    if not degrees:
        yield []
        return
    for block in itertools.combinations(pool, degrees[0]):
        rest = tuple(x for x in pool if x not in block)
        for tail in _distribute(rest, degrees[1:]):
            yield [block] + tail


def iter_functional_digraphs(
    df: DegreeFunction, limit: int | None = DEFAULT_ENUMERATION_LIMIT
) -> Iterator[FunctionalDigraph]:
    """Every member of S_d: each non-root destination points to some source so
    that source ``i`` receives ``d(i)`` arcs, and each source points anywhere."""
    _guard(df, limit, count_functional_digraphs(df))
    m, n = df.m, df.n
    pool = tuple(range(1, n))
    for blocks in _distribute(pool, df.degrees):
        incoming = {dst(j): src(i) for i, block in enumerate(blocks) for j in block}
        for outs in itertools.product(range(n), repeat=m):
            parent = dict(incoming)
            for i, j in enumerate(outs):
                parent[src(i)] = dst(j)
            yield FunctionalDigraph(_freeze(parent), df)


def enumerate_functional_digraphs(df, limit=DEFAULT_ENUMERATION_LIMIT) -> list[FunctionalDigraph]:
    return list(iter_functional_digraphs(df, limit))


def orient(tree: BipartiteTree) -> dict[Node, Node]:
    """Parent map of ``tree`` oriented towards ROOT."""
    adj: dict[Node, list[Node]] = {v: [] for v in _all_nodes(tree.df)}
    for s, t in tree.edges:
        adj[src(s)].append(dst(t))
        adj[dst(t)].append(src(s))
    parent: dict[Node, Node] = {}
    stack = [ROOT]
    seen = {ROOT}
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                parent[w] = v
                stack.append(w)
    return parent


def iter_marked_trees(
    df: DegreeFunction, limit: int | None = DEFAULT_ENUMERATION_LIMIT
) -> Iterator[MarkedRootedTree]:
    for tree in iter_trees(df, limit):
        arcs = _freeze(orient(tree))
        for mark in range(df.n):
            yield MarkedRootedTree(arcs, mark, df)


def enumerate_marked_trees(df, limit=DEFAULT_ENUMERATION_LIMIT) -> list[MarkedRootedTree]:
    return list(iter_marked_trees(df, limit))


def _cycles(parent: Mapping[Node, Node]) -> list[list[Node]]:
    """Cycles of the functional graph, each listed in arc order."""
    state: dict[Node, int] = {ROOT: 2}  # 1 = on current walk, 2 = finished
    cycles = []
    for start in sorted(parent):
        walk = []
        v = start
        while state.get(v, 0) == 0:
            state[v] = 1
            walk.append(v)
            v = parent[v]
        if state[v] == 1:
            cycles.append(walk[walk.index(v):])
        for w in walk:
            state[w] = 2
    return cycles


def phi(S: FunctionalDigraph) -> MarkedRootedTree:
    check_functional(S)
    parent = S.parent
    heads = []
    for cycle in _cycles(parent):
        top = max(v for v in cycle if v[0] == "s")
        heads.append((top, parent[top]))
    heads.sort()
    prev = ROOT
    for top, follower in heads:
        parent[top] = prev
        prev = follower
    return MarkedRootedTree(_freeze(parent), prev[1], S.df)


def root_path(R: MarkedRootedTree) -> list[Node]:
    """Vertices from ROOT to the mark, against the orientation."""
    parent = R.parent
    v = dst(R.mark)
    path = [v]
    while v != ROOT:
        v = parent[v]
        path.append(v)
    path.reverse()
    return path


def psi(R: MarkedRootedTree) -> FunctionalDigraph:
    check_marked(R)
    parent = R.parent
    path = root_path(R)
    # indices of the left-to-right maxima among sources on the path
    records = []
    for idx, v in enumerate(path):
        if v[0] == "s" and (not records or v > path[records[-1]]):
            records.append(idx)
    for k, idx in enumerate(records):
        end = records[k + 1] - 1 if k + 1 < len(records) else len(path) - 1
        parent[path[idx]] = path[end]
    return FunctionalDigraph(_freeze(parent), R.df)


@dataclass(frozen=True)
class BijectionReport:
    df: DegreeFunction
    functional: int
    marked: int
    trees_formula: int
    phi_psi_ok: bool
    psi_phi_ok: bool

    @property
    def ok(self) -> bool:
        n = self.df.n
        return (
            self.phi_psi_ok
            and self.psi_phi_ok
            and self.functional == self.marked == n * self.trees_formula
        )


def bijection_check(df: DegreeFunction, limit: int | None = DEFAULT_ENUMERATION_LIMIT) -> BijectionReport:
    """Round-trip both maps over the whole of S_d and R_d."""
    digraphs = enumerate_functional_digraphs(df, limit)
    marked = enumerate_marked_trees(df, limit)
    marked_set = set(marked)
    psi_phi = all(psi(image) == S for S in digraphs for image in [phi(S)])
    psi_phi = psi_phi and all(phi(S) in marked_set for S in digraphs)
    phi_psi = all(phi(psi(R)) == R for R in marked)
    return BijectionReport(df, len(digraphs), len(marked), count_trees(df), phi_psi, psi_phi)

"""Pivots on trees of T_d and the pivoting graph G_d (the 1-skeleton of P_d)."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from .degree_core import (
    DEFAULT_ENUMERATION_LIMIT,
    BipartiteTree,
    DegreeFunction,
    Edge,
    enumerate_trees,
)
from .errors import BoundViolation, ValidationError


@dataclass(frozen=True)
class PivotMove:
    inserted: Edge
    removed: Edge

    def inverse(self) -> "PivotMove":
        return PivotMove(self.removed, self.inserted)

    def __str__(self):
        return f"+{self.inserted[0]}:{self.inserted[1]} -{self.removed[0]}:{self.removed[1]}"


def tree_path(tree: BipartiteTree, start: int, end: int) -> list[int]:
    """Vertex path between two vertices of ``tree``.

    Vertices are numbered sources first (``s``), then destinations (``m + t``).
    """
    adj = tree.adjacency
    prev = {start: start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        if v == end:
            break
        for w in adj.get(v, ()):
            if w not in prev:
                prev[w] = v
                queue.append(w)
    if end not in prev:
        raise ValidationError(f"vertices {start} and {end} are not connected")
    path = [end]
    while path[-1] != start:
        path.append(prev[path[-1]])
    path.reverse()
    return path


def cycle_partner(tree: BipartiteTree, inserted: Edge) -> Edge:
    """The other edge at ``inserted``'s source on the cycle of T + inserted."""
    s, t = inserted
    m = tree.df.m
    path = tree_path(tree, s, m + t)
    return (s, path[1] - m)


def pivot(tree: BipartiteTree, inserted: Edge) -> tuple[BipartiteTree, PivotMove]:
    """Insert a non-tree edge and drop its partner on the created cycle."""
    inserted = tuple(inserted)
    df = tree.df
    s, t = inserted
    if not (0 <= s < df.m and 0 <= t < df.n):
        raise ValidationError(f"edge {s}:{t} out of range for m={df.m}, n={df.n}")
    if inserted in tree:
        raise ValidationError(f"edge {s}:{t} is already in the tree")
    return _pivot(tree, inserted)


@lru_cache(maxsize=1 << 18)
def _pivot(tree: BipartiteTree, inserted: Edge) -> tuple[BipartiteTree, PivotMove]:
    # exhaustive sweeps revisit the same few thousand trees constantly
    removed = cycle_partner(tree, inserted)
    edges = sorted((tree.edge_set - {removed}) | {inserted})
    return BipartiteTree(tuple(edges), tree.df), PivotMove(inserted, removed)


def non_tree_edges(tree: BipartiteTree) -> list[Edge]:
    present = tree.edge_set
    return [(s, t) for s in range(tree.df.m) for t in range(tree.df.n) if (s, t) not in present]


def neighbors(tree: BipartiteTree) -> list[BipartiteTree]:
    return [pivot(tree, edge)[0] for edge in non_tree_edges(tree)]


@dataclass(frozen=True)
class PivotingGraph:
    df: DegreeFunction
    trees: tuple[BipartiteTree, ...]
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "_index", {t.edges: i for i, t in enumerate(self.trees)})

    def __len__(self):
        return len(self.trees)

    def index(self, tree: BipartiteTree) -> int:
        try:
            return self._index[tree.edges]
        except KeyError:
            raise ValidationError(f"unknown vertex {tree.encode()}") from None

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def edges(self):
        for i, nbrs in enumerate(self.adjacency):
            for j in nbrs:
                if i < j:
                    yield i, j

    def to_csr(self) -> csr_matrix:
        rows = [i for i, nbrs in enumerate(self.adjacency) for _ in nbrs]
        cols = [j for nbrs in self.adjacency for j in nbrs]
        size = len(self.trees)
        return csr_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(size, size))


def build_graph(df: DegreeFunction, limit: int | None = DEFAULT_ENUMERATION_LIMIT) -> PivotingGraph:
    trees = tuple(enumerate_trees(df, limit))
    index = {t.edges: i for i, t in enumerate(trees)}
    adjacency = []
    for tree in trees:
        adjacency.append(tuple(sorted(index[nb.edges] for nb in neighbors(tree))))
    return PivotingGraph(df, trees, tuple(adjacency))


def bfs_distances(g: PivotingGraph, source: int) -> list[int]:
    dist = [-1] * len(g)
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in g.adjacency[v]:
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def bfs_distance(g: PivotingGraph, a: BipartiteTree, b: BipartiteTree) -> int:
    i, j = g.index(a), g.index(b)
    dist = bfs_distances(g, i)
    if dist[j] < 0:
        raise ValidationError("vertices lie in different components")
    return dist[j]


def eccentricities(g: PivotingGraph, chunk: int = 256) -> list[int]:
    """Exact eccentricity of every vertex (BFS from each vertex, run in C)."""
    size = len(g)
    if size == 1:
        return [0]
    csr = g.to_csr()
    out = []
    for lo in range(0, size, chunk):
        rows = shortest_path(
            csr, method="D", directed=False, unweighted=True, indices=range(lo, min(size, lo + chunk))
        )
        if np.isinf(rows).any():
            raise ValidationError("pivoting graph is disconnected")
        out.extend(int(v) for v in rows.max(axis=1))
    return out


def diameter_bound(df: DegreeFunction) -> int:
    return 2 * (df.n - 1)


def diameter(g: PivotingGraph, check_bound: bool = True) -> int:
    """Exact diameter; raises BoundViolation if it exceeds 2n - 2."""
    value = max(eccentricities(g))
    bound = diameter_bound(g.df)
    if check_bound and value > bound:
        raise BoundViolation(
            f"diameter {value} exceeds 2n-2 = {bound} for d=({g.df})", payload=value
        )
    return value


def to_dot(g: PivotingGraph) -> str:
    lines = [f'graph "G_d({g.df})" {{']
    for i, tree in enumerate(g.trees):
        lines.append(f'  {i} [label="{tree.encode()}"];')
    for i, j in g.edges():
        lines.append(f"  {i} -- {j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json_obj(g: PivotingGraph) -> dict:
    return {
        "degrees": list(g.df.degrees),
        "vertices": [t.encode() for t in g.trees],
        "edges": [[i, j] for i, j in g.edges()],
    }

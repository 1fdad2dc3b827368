"""Degree functions and spanning trees of K_{M,N} with prescribed source degrees.

Sources are ``0..m-1`` and destinations ``0..n-1``.  A tree is stored as the
lexicographically sorted tuple of its ``(source, destination)`` edges, which
doubles as its canonical encoding.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import comb, factorial, prod
from typing import Iterable, Iterator, Sequence

from .errors import InstanceTooLarge, StructuralError, ValidationError

Edge = tuple[int, int]

DEFAULT_ENUMERATION_LIMIT = 10**7


@dataclass(frozen=True)
class DegreeFunction:
    """The map d: M -> N_{>=0}; source ``i`` gets tree degree ``1 + degrees[i]``."""

    degrees: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(self.degrees))
        if not self.degrees:
            raise ValidationError("degree sequence must be non-empty")
        for i, d in enumerate(self.degrees):
            if isinstance(d, bool) or not isinstance(d, int):
                raise ValidationError(f"degree at index {i} is not an integer: {d!r}")
            if d < 0:
                raise ValidationError(f"degree at index {i} is negative: {d}")

    @property
    def m(self) -> int:
        return len(self.degrees)

    @property
    def n(self) -> int:
        return 1 + sum(self.degrees)

    @property
    def e(self) -> int:
        return self.m + self.n - 1

    def tree_degree(self, source: int) -> int:
        return 1 + self.degrees[source]

    def __str__(self):
        return ",".join(map(str, self.degrees))


def make_degree_function(degrees: Iterable[int]) -> DegreeFunction:
    return DegreeFunction(tuple(degrees))


def parse_degrees(text: str) -> DegreeFunction:
    """Parse the comma-separated format, e.g. ``"1,1,1"``."""
    parts = [p.strip() for p in text.split(",")]
    values = []
    for i, p in enumerate(parts):
        try:
            values.append(int(p))
        except ValueError:
            raise ValidationError(f"degree at index {i} is not an integer: {p!r}") from None
    return DegreeFunction(tuple(values))


@dataclass(frozen=True)
class BipartiteTree:
    """A member of T_d.  Construct through :func:`make_tree` to get validation."""

    edges: tuple[Edge, ...]
    df: DegreeFunction

    def __contains__(self, edge) -> bool:
        return tuple(edge) in self.edge_set

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        per_source: list[list[int]] = [[] for _ in range(self.df.m)]
        for s, t in self.edges:
            per_source[s].append(t)
        return tuple(map(tuple, per_source))

    @cached_property
    def adjacency(self) -> dict[int, list[int]]:
        """Neighbour lists with sources numbered ``s`` and destinations ``m + t``."""
        m = self.df.m
        adj: dict[int, list[int]] = {v: [] for v in range(m + self.df.n)}
        for s, t in self.edges:
            adj[s].append(m + t)
            adj[m + t].append(s)
        return adj

    def incident(self, source: int) -> tuple[int, ...]:
        """Destinations adjacent to ``source``, ascending."""
        return self.incidence[source]

    def encode(self) -> str:
        return encode_edges(self.edges)

    def __str__(self):
        return self.encode()


def encode_edges(edges: Iterable[Edge]) -> str:
    return ",".join(f"{s}:{t}" for s, t in sorted(edges))


def parse_edges(text: str) -> list[Edge]:
    """Parse ``pair (',' pair)*`` with ``pair := int ':' int``."""
    edges = []
    for i, chunk in enumerate(text.split(",")):
        left, sep, right = chunk.strip().partition(":")
        try:
            if not sep:
                raise ValueError
            edges.append((int(left), int(right)))
        except ValueError:
            raise ValidationError(f"malformed edge at position {i}: {chunk!r}") from None
    return edges


def parse_tree(text: str, df: DegreeFunction) -> BipartiteTree:
    return make_tree(df, parse_edges(text))


def tree_violation(df: DegreeFunction, edges: Iterable[Edge]) -> str | None:
    """Return a description of why ``edges`` is not in T_d, or None if it is."""
    edges = list(edges)
    m, n = df.m, df.n
    if len(set(edges)) != len(edges):
        return "duplicate edges"
    for s, t in edges:
        if not (0 <= s < m and 0 <= t < n):
            return f"edge {s}:{t} out of range for m={m}, n={n}"
    if len(edges) != df.e:
        return f"expected {df.e} edges, got {len(edges)}"
    deg = [0] * m
    for s, _ in edges:
        deg[s] += 1
    for s in range(m):
        if deg[s] != df.tree_degree(s):
            return f"source {s} has degree {deg[s]}, expected {df.tree_degree(s)}"
    # e = m + n - 1 edges, so acyclic <=> spanning tree
    parent = list(range(m + n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for s, t in edges:
        a, b = find(s), find(m + t)
        if a == b:
            return f"edge {s}:{t} closes a cycle"
        parent[a] = b
    return None


def make_tree(df: DegreeFunction, edges: Iterable[Edge]) -> BipartiteTree:
    edges = sorted(tuple(e) for e in edges)
    problem = tree_violation(df, edges)
    if problem is not None:
        raise ValidationError(f"not a tree of T_d for d=({df}): {problem}")
    return BipartiteTree(tuple(edges), df)


def count_trees(df: DegreeFunction) -> int:
    """|T_d| = (n-1)! n^(m-1) / prod d(mu)!, evaluated exactly."""
    numerator = factorial(df.n - 1) * df.n ** (df.m - 1)
    denominator = prod(factorial(d) for d in df.degrees)
    quotient, remainder = divmod(numerator, denominator)
    assert remainder == 0, (df, numerator, denominator)
    return quotient


def search_size(df: DegreeFunction) -> int:
    """Number of per-source destination choices explored by enumeration."""
    return prod(comb(df.n, 1 + d) for d in df.degrees)


def _check_guard(df: DegreeFunction, limit: int | None, what: str = "enumeration"):
    if limit is None:
        return
    estimate = search_size(df)
    if estimate > limit:
        raise InstanceTooLarge(what, estimate, limit)


def iter_trees(
    df: DegreeFunction, limit: int | None = DEFAULT_ENUMERATION_LIMIT
) -> Iterator[BipartiteTree]:
    """Yield T_d in canonical order.

    Sources are filled in index order, each picking a ``1 + d`` subset of
    destinations in lexicographic order; a choice is kept only when its
    destinations lie in pairwise distinct components of the forest built so
    far.  With e = m + n - 1 edges, acyclic means spanning.
    """
    _check_guard(df, limit)
    m, n = df.m, df.n
    options = [list(itertools.combinations(range(n), 1 + d)) for d in df.degrees]

    def extend(source: int, comp: list[int], chosen: list[tuple[int, ...]]):
        if source == m:
            edges = tuple((s, t) for s, dests in enumerate(chosen) for t in dests)
            yield BipartiteTree(edges, df)
            return
        for dests in options[source]:
            labels = {comp[t] for t in dests}
            if len(labels) < len(dests):
                continue
            target = comp[dests[0]]
            merged = [target if c in labels else c for c in comp]
            chosen.append(dests)
            yield from extend(source + 1, merged, chosen)
            chosen.pop()

    yield from extend(0, list(range(n)), [])


def enumerate_trees(
    df: DegreeFunction, limit: int | None = DEFAULT_ENUMERATION_LIMIT
) -> list[BipartiteTree]:
    return list(iter_trees(df, limit))


def _cyclic_pair(df: DegreeFunction):
    m, n = df.m, df.n
    first = [(i, i) for i in range(m)] + [(i, i + 1) for i in range(m)]
    second = [(i, (i + 2) % n) for i in range(m)] + [(i, (i + 3) % n) for i in range(m)]
    return first, second


def edge_disjoint_pair(
    df: DegreeFunction, limit: int | None = DEFAULT_ENUMERATION_LIMIT
) -> tuple[BipartiteTree, BipartiteTree] | None:
    """Two trees of T_d with no common edge, or None if there is no such pair.

    For d == 1 with m >= 3 the paths t0-s0-t1-s1-...-tm and
    t2-s0-t3-s1-... (indices mod n) are used directly; otherwise the pair is
    found by exhaustive search.
    """
    if all(d == 1 for d in df.degrees) and df.m >= 3:
        first, second = _cyclic_pair(df)
        if tree_violation(df, first) is None and tree_violation(df, second) is None:
            return make_tree(df, first), make_tree(df, second)
    trees = enumerate_trees(df, limit)
    for i, a in enumerate(trees):
        for b in trees[i + 1:]:
            if not (a.edge_set & b.edge_set):
                return a, b
    return None


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All tuples of ``parts`` non-negative integers summing to ``total``."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def degree_functions(max_m: int, max_n: int, max_size: int | None = None) -> Iterator[DegreeFunction]:
    """Every degree function with m <= max_m, n <= max_n and optionally m+n <= max_size."""
    for m in range(1, max_m + 1):
        for n in range(1, max_n + 1):
            if max_size is not None and m + n > max_size:
                continue
            for degrees in compositions(n - 1, m):
                yield DegreeFunction(degrees)


@lru_cache(maxsize=1 << 16)
def is_member(tree: BipartiteTree) -> bool:
    """Whether ``tree`` really lies in T_d (memoized full check)."""
    return tree_violation(tree.df, tree.edges) is None


def validate_tree(tree: BipartiteTree) -> None:
    problem = tree_violation(tree.df, tree.edges)
    if problem is not None:
        raise StructuralError(problem)

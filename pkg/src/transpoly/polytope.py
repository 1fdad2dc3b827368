"""The transportation polytope P_d and its vertices.

P_d has supplies ``1 + m d(mu)`` and demands ``m``.  Everything is exact
integer arithmetic; vertices of P_d are integral.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Sequence

from .degree_core import (
    BipartiteTree,
    DegreeFunction,
    count_trees,
    make_tree,
    tree_violation,
)
from .errors import InstanceTooLarge, ValidationError

SIMPLICITY_SCAN_LIMIT = 2**24


class OutOfLemmaScope(ValidationError):
    """Facet characterization requested with m * n <= 4."""


@dataclass(frozen=True)
class Margins:
    supply: tuple[int, ...]
    demand: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.supply)


def margins(df: DegreeFunction) -> Margins:
    m = df.m
    result = Margins(tuple(1 + m * d for d in df.degrees), (m,) * df.n)
    assert sum(result.supply) == sum(result.demand) == df.m * df.n
    return result


@dataclass(frozen=True)
class VertexPoint:
    x: tuple[tuple[int, ...], ...]

    @property
    def row_sums(self) -> tuple[int, ...]:
        return tuple(sum(row) for row in self.x)

    @property
    def col_sums(self) -> tuple[int, ...]:
        return tuple(sum(col) for col in zip(*self.x))

    def positive_entries(self) -> list[tuple[int, int]]:
        return [(i, j) for i, row in enumerate(self.x) for j, v in enumerate(row) if v > 0]

    def to_csv(self) -> str:
        return "".join(",".join(map(str, row)) + "\n" for row in self.x)


def satisfies_margins(point: VertexPoint, marg: Margins) -> bool:
    if any(v < 0 for row in point.x for v in row):
        return False
    return point.row_sums == marg.supply and point.col_sums == marg.demand


def _matrix(entries: dict[tuple[int, int], int], m: int, n: int) -> VertexPoint:
    return VertexPoint(tuple(tuple(entries.get((i, j), 0) for j in range(n)) for i in range(m)))


def solve_tree_system(
    edges: Sequence[tuple[int, int]], supply: Sequence[int], demand: Sequence[int]
) -> dict[tuple[int, int], int]:
    """Unique solution supported on a spanning tree, by repeated leaf elimination."""
    supply = list(supply)
    demand = list(demand)
    m = len(supply)
    remaining = set(edges)
    degree: dict[int, int] = {}
    for s, t in remaining:
        degree[s] = degree.get(s, 0) + 1
        degree[m + t] = degree.get(m + t, 0) + 1
    values = {}
    while remaining:
        leaf = min(v for v, k in degree.items() if k == 1)
        if leaf < m:
            edge = next(e for e in remaining if e[0] == leaf)
            value = supply[leaf]
        else:
            edge = next(e for e in remaining if e[1] == leaf - m)
            value = demand[leaf - m]
        s, t = edge
        values[edge] = value
        supply[s] -= value
        demand[t] -= value
        remaining.discard(edge)
        degree[s] -= 1
        degree[m + t] -= 1
    if any(supply) or any(demand):
        raise ValidationError("margins are not balanced on this tree")
    return values


def tree_to_vertex(df: DegreeFunction, tree: BipartiteTree) -> VertexPoint:
    """The vertex of P_d whose support is ``tree``."""
    marg = margins(df)
    values = solve_tree_system(tree.edges, marg.supply, marg.demand)
    assert all(v > 0 for v in values.values()), values
    return _matrix(values, df.m, df.n)


def tree_to_vertex_inductive(df: DegreeFunction, tree: BipartiteTree) -> VertexPoint:
    """Same vertex, built by peeling one leaf at a time and lifting back up.

    A destination leaf ``tau`` at ``sigma`` is removed by lowering d(sigma);
    it carries the full demand m.  A source leaf ``sigma`` at ``tau`` is
    removed outright; lifting adds 1 on ``(sigma, tau)`` and on every edge of
    the smaller tree oriented from a destination to a source when rooted at
    ``tau``.
    """
    sources = tuple(range(df.m))
    dests = tuple(range(df.n))
    values = _inductive(sources, dests, dict(enumerate(df.degrees)), frozenset(tree.edges))
    return _matrix(values, df.m, df.n)


def _inductive(sources, dests, degree, edges):
    m = len(sources)
    if m == 1 and len(dests) == 1:
        return {(sources[0], dests[0]): 1}
    deg_t = {t: 0 for t in dests}
    for _, t in edges:
        deg_t[t] += 1
    leaf_dest = next((t for t in dests if deg_t[t] == 1), None)
    if leaf_dest is not None:
        sigma = next(s for s, t in edges if t == leaf_dest)
        smaller = dict(degree)
        smaller[sigma] -= 1
        values = _inductive(
            sources, tuple(t for t in dests if t != leaf_dest), smaller,
            edges - {(sigma, leaf_dest)},
        )
        values[(sigma, leaf_dest)] = m
        return values
    # no destination leaf: some source has tree degree 1, i.e. d(sigma) = 0
    sigma = next(s for s in sources if degree[s] == 0)
    tau = next(t for s, t in edges if s == sigma)
    rest = edges - {(sigma, tau)}
    values = _inductive(
        tuple(s for s in sources if s != sigma), dests,
        {s: d for s, d in degree.items() if s != sigma}, rest,
    )
    lifted = {(sigma, tau): 1}
    for (s, t), v in values.items():
        lifted[(s, t)] = v + 1 if _points_to_source(rest, s, t, tau) else v
    return lifted


def _points_to_source(edges, s, t, root) -> bool:
    """Whether edge s-t is oriented t -> s when the tree is rooted at destination ``root``.

    That holds exactly when ``s`` is the endpoint nearer to ``root``.
    """
    adj: dict[tuple[str, int], list] = {}
    for a, b in edges:
        adj.setdefault(("s", a), []).append(("t", b))
        adj.setdefault(("t", b), []).append(("s", a))
    start = ("t", root)
    dist = {start: 0}
    frontier = [start]
    while frontier:
        nxt = []
        for v in frontier:
            for w in adj.get(v, ()):
                if w not in dist:
                    dist[w] = dist[v] + 1
                    nxt.append(w)
        frontier = nxt
    return dist[("s", s)] < dist[("t", t)]


class SupportKind(enum.Enum):
    VERTEX = "vertex"
    NOT_A_TREE = "not_a_tree"


@dataclass(frozen=True)
class SupportResult:
    kind: SupportKind
    edges: tuple[tuple[int, int], ...]
    tree: BipartiteTree | None = None

    @property
    def is_vertex(self) -> bool:
        return self.kind is SupportKind.VERTEX


def support(df: DegreeFunction, point: VertexPoint) -> SupportResult:
    """Positive entries of ``point``, classified as a tree of T_d or not."""
    edges = tuple(point.positive_entries())
    if tree_violation(df, edges) is None:
        return SupportResult(SupportKind.VERTEX, edges, make_tree(df, edges))
    return SupportResult(SupportKind.NOT_A_TREE, edges)


def find_degeneracy(supply: Sequence[int], demand: Sequence[int], limit: int | None = SIMPLICITY_SCAN_LIMIT):
    """A pair of non-empty proper subsets with equal totals, or None.

    Existence of such a pair is exactly non-simplicity of P_{supply,demand}.
    """
    m, n = len(supply), len(demand)
    if limit is not None and 2**m * 2**n > limit:
        raise InstanceTooLarge("simplicity scan", 2**m * 2**n, limit)
    by_total: dict[int, tuple[int, ...]] = {}
    for r in range(1, m):
        for subset in itertools.combinations(range(m), r):
            by_total.setdefault(sum(supply[i] for i in subset), subset)
    for r in range(1, n):
        for subset in itertools.combinations(range(n), r):
            total = sum(demand[j] for j in subset)
            if total in by_total:
                return by_total[total], subset
    return None


@dataclass(frozen=True)
class SimplicityResult:
    simple: bool
    witness: tuple[tuple[int, ...], tuple[int, ...]] | None = None


def check_simplicity(df: DegreeFunction, limit: int | None = SIMPLICITY_SCAN_LIMIT) -> SimplicityResult:
    marg = margins(df)
    witness = find_degeneracy(marg.supply, marg.demand, limit)
    return SimplicityResult(witness is None, witness)


def dimension(df: DegreeFunction) -> int:
    return (df.m - 1) * (df.n - 1)


def _check_lemma_scope(df: DegreeFunction) -> None:
    if df.m * df.n <= 4:
        raise OutOfLemmaScope(f"facet characterization needs m*n > 4, got m*n = {df.m * df.n}")


def is_facet(df: DegreeFunction, mu: int, nu: int) -> bool:
    """Whether x[mu, nu] >= 0 defines a facet of P_d."""
    _check_lemma_scope(df)
    if not (0 <= mu < df.m and 0 <= nu < df.n):
        raise ValidationError(f"pair {mu}:{nu} out of range")
    marg = margins(df)
    return marg.supply[mu] + marg.demand[nu] < marg.total


def facet_count(df: DegreeFunction) -> int:
    _check_lemma_scope(df)
    return sum(is_facet(df, mu, nu) for mu in range(df.m) for nu in range(df.n))


def all_facets_hypothesis(df: DegreeFunction) -> bool:
    """At least two sources with d >= 1 (then every x >= 0 inequality is a facet)."""
    return sum(d >= 1 for d in df.degrees) >= 2


def hirsch_bound(df: DegreeFunction) -> int:
    """Facets minus dimension; m + n - 1 when every inequality is a facet."""
    if all_facets_hypothesis(df):
        return df.m + df.n - 1
    return facet_count(df) - dimension(df)


@dataclass(frozen=True)
class FVector01:
    f0: int
    f1: int


def f_vector(df: DegreeFunction) -> FVector01:
    f0 = count_trees(df)
    f1, rest = divmod((df.m - 1) * (df.n - 1) * f0, 2)
    assert rest == 0, df
    return FVector01(f0, f1)


def summary(df: DegreeFunction) -> dict:
    """f0, f1, facet count, Hirsch bound and 2n - 2; facet data is None when m*n <= 4."""
    fv = f_vector(df)
    try:
        facets = facet_count(df)
        hirsch = hirsch_bound(df)
    except OutOfLemmaScope:
        facets = hirsch = None
    return {
        "f0": fv.f0,
        "f1": fv.f1,
        "facets": facets,
        "hirsch": hirsch,
        "bound2n2": 2 * df.n - 2,
    }

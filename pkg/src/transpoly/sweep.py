"""Full invariant sweep for one degree function (backs ``transpoly check``)."""

from __future__ import annotations

import itertools
from collections import defaultdict

from .bounded_path import bounded_pivot_path
from .degree_core import DegreeFunction, count_trees, is_member
from .joyal import bijection_check
from .pivoting import (
    PivotingGraph,
    bfs_distances,
    build_graph,
    diameter,
    diameter_bound,
    non_tree_edges,
    pivot,
)
from .polytope import (
    all_facets_hypothesis,
    check_simplicity,
    f_vector,
    facet_count,
    is_facet,
    margins,
    satisfies_margins,
    support,
    tree_to_vertex,
    tree_to_vertex_inductive,
)

ALL_PAIRS_CAP = 200


def one_swap_pairs(g: PivotingGraph) -> set[tuple[int, int]]:
    """Vertex pairs whose trees differ in exactly one edge each.

    Two trees share a key ``tree - {edge}`` iff their symmetric difference
    has size two.
    """
    groups = defaultdict(list)
    for i, tree in enumerate(g.trees):
        for edge in tree.edges:
            groups[tree.edge_set - {edge}].append(i)
    pairs = set()
    for members in groups.values():
        for a, b in itertools.combinations(sorted(members), 2):
            pairs.add((a, b))
    return pairs


def path_pairs(g: PivotingGraph, cap: int = ALL_PAIRS_CAP):
    """All ordered pairs for small graphs, else pairs touching the first 20 vertices."""
    size = len(g)
    if size <= cap:
        return [(a, b) for a in range(size) for b in range(size)]
    head = range(min(20, size))
    return [(a, b) for a in head for b in range(size)] + [(b, a) for a in head for b in range(size)]


def invariant_report(df: DegreeFunction, limit: int | None = None) -> dict[str, bool]:
    g = build_graph(df, limit)
    trees = g.trees
    m, n = df.m, df.n
    report: dict[str, bool] = {}

    report["count_matches_formula"] = len(trees) == count_trees(df)
    report["canonical_order_strict"] = all(a.edges < b.edges for a, b in zip(trees, trees[1:]))
    report["trees_valid"] = all(is_member(t) for t in trees)

    bij = bijection_check(df, limit)
    report["bijection_round_trips"] = bij.ok

    report["graph_regular"] = all(len(a) == (m - 1) * (n - 1) for a in g.adjacency)
    report["graph_symmetric"] = all(i in g.adjacency[j] for i, j in g.edges())
    dist0 = bfs_distances(g, 0)
    report["graph_connected"] = min(dist0) >= 0
    report["f1_matches_edges"] = g.edge_count == f_vector(df).f1
    report["pivot_involution"] = all(
        pivot(pivot(t, e)[0], pivot(t, e)[1].removed)[0] == t
        for t in trees for e in non_tree_edges(t)
    )
    report["adjacent_iff_one_swap"] = set(g.edges()) == one_swap_pairs(g)

    diam = diameter(g, check_bound=False)
    report["diameter_within_2n_minus_2"] = diam <= diameter_bound(df)

    rows: dict[int, list[int]] = {}
    within = geodesic_ok = True
    for a, b in path_pairs(g):
        cert = bounded_pivot_path(trees[a], trees[b], check_bound=False)
        cert.verify()
        if a not in rows:
            rows[a] = bfs_distances(g, a)
        within = within and cert.total_length <= cert.bound
        geodesic_ok = geodesic_ok and cert.total_length >= rows[a][b]
    report["bounded_path_within_2n_minus_2"] = within
    report["bounded_path_at_least_bfs"] = geodesic_ok

    marg = margins(df)
    points = [tree_to_vertex(df, t) for t in trees]
    report["vertices_satisfy_margins"] = all(satisfies_margins(p, marg) for p in points)
    report["vertices_tree_supported"] = all(
        len(p.positive_entries()) == m + n - 1 and support(df, p).tree == t
        for p, t in zip(points, trees)
    )
    report["vertices_distinct"] = len(set(points)) == len(points)
    report["inductive_construction_agrees"] = all(
        tree_to_vertex_inductive(df, t) == p for p, t in zip(points, trees)
    )
    report["simple"] = check_simplicity(df).simple

    if m * n > 4:
        omitted = {(s, t) for s in range(m) for t in range(n)
                   if any((s, t) not in tree for tree in trees)}
        report["facets_match_tree_omission"] = all(
            is_facet(df, s, t) == ((s, t) in omitted) for s in range(m) for t in range(n)
        )
        if all_facets_hypothesis(df):
            report["facet_count_is_mn"] = facet_count(df) == m * n
    return report

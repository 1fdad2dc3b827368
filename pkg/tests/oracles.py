"""Brute-force reference implementations, independent of the package code paths."""

import itertools

import networkx as nx
import sympy


def _graph(m, n, edges):
    g = nx.Graph()
    g.add_nodes_from([("s", i) for i in range(m)] + [("t", j) for j in range(n)])
    g.add_edges_from((("s", s), ("t", t)) for s, t in edges)
    return g


def brute_trees(degrees):
    """Filter every e-subset of K_{m,n} by source degrees and tree-ness."""
    m, n = len(degrees), 1 + sum(degrees)
    cells = [(s, t) for s in range(m) for t in range(n)]
    out = []
    for subset in itertools.combinations(cells, m + n - 1):
        deg = [0] * m
        for s, _ in subset:
            deg[s] += 1
        if any(deg[s] != 1 + degrees[s] for s in range(m)):
            continue
        if nx.is_tree(_graph(m, n, subset)):
            out.append(tuple(sorted(subset)))
    return sorted(out)


def brute_functional(degrees):
    """Every out-map on M + N - {t0} that alternates sides, filtered by source in-degree."""
    m, n = len(degrees), 1 + sum(degrees)
    out = []
    for src_out in itertools.product(range(n), repeat=m):
        for dst_out in itertools.product(range(m), repeat=n - 1):
            indeg = [0] * m
            for s in dst_out:
                indeg[s] += 1
            if indeg == list(degrees):
                arcs = {(("s", i), ("t", j)) for i, j in enumerate(src_out)}
                arcs |= {(("t", j + 1), ("s", s)) for j, s in enumerate(dst_out)}
                out.append(frozenset(arcs))
    return out


def unique_cycle(tree_edges, m, n, inserted):
    """Edges of the unique cycle of T + inserted, via networkx."""
    g = _graph(m, n, list(tree_edges) + [inserted])
    cycle = nx.find_cycle(g)
    return {(a[1], b[1]) if a[0] == "s" else (b[1], a[1]) for a, b in cycle}


def pivot_graph(degrees):
    """Trees joined when their edge sets differ in exactly one edge each."""
    trees = brute_trees(degrees)
    g = nx.Graph()
    g.add_nodes_from(trees)
    for a, b in itertools.combinations(trees, 2):
        if len(set(a) - set(b)) == 1:
            g.add_edge(a, b)
    return g


def vertex_by_linear_solve(degrees, edges):
    """Solve the margin equations restricted to the tree's cells exactly."""
    m, n = len(degrees), 1 + sum(degrees)
    supply = [1 + m * d for d in degrees]
    demand = [m] * n
    rows = []
    rhs = []
    for s in range(m):
        rows.append([1 if e[0] == s else 0 for e in edges])
        rhs.append(supply[s])
    for t in range(n):
        rows.append([1 if e[1] == t else 0 for e in edges])
        rhs.append(demand[t])
    a = sympy.Matrix(rows)
    b = sympy.Matrix(rhs)
    sol, params = a.gauss_jordan_solve(b)
    assert params.shape[0] == 0
    x = [[0] * n for _ in range(m)]
    for (s, t), v in zip(edges, sol):
        assert v == int(v)
        x[s][t] = int(v)
    return x

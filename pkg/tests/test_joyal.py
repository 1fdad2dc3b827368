import pytest
from hypothesis import given

from conftest import small_degree_functions
from oracles import brute_functional
from transpoly.degree_core import DegreeFunction, count_trees, degree_functions, make_tree
from transpoly.errors import StructuralError
from transpoly.joyal import (
    FunctionalDigraph,
    MarkedRootedTree,
    bijection_check,
    check_marked,
    dst,
    enumerate_functional_digraphs,
    enumerate_marked_trees,
    orient,
    phi,
    psi,
    src,
)

D1 = DegreeFunction((1,))


def digraph(df, arcs):
    return FunctionalDigraph(tuple(sorted(arcs)), df)


def marked(df, arcs, mark):
    return MarkedRootedTree(tuple(sorted(arcs)), mark, df)


CONNECTED = [(dst(1), src(0)), (src(0), dst(0))]
TWO_CYCLE = [(dst(1), src(0)), (src(0), dst(1))]


@pytest.mark.parametrize("degrees, expected", [((1,), 2), ((1, 1), 18), ((0,), 1), ((2, 1), 48)])
def test_functional_digraph_counts(degrees, expected):
    df = DegreeFunction(degrees)
    found = enumerate_functional_digraphs(df)
    assert len(found) == expected == df.n * count_trees(df)
    assert {frozenset(S.arcs) for S in found} == set(brute_functional(degrees))


def test_single_source_digraphs_exact():
    found = {S.arcs for S in enumerate_functional_digraphs(D1)}
    assert found == {digraph(D1, CONNECTED).arcs, digraph(D1, TWO_CYCLE).arcs}


@pytest.mark.parametrize("degrees, expected", [((1, 1), 18), ((1,), 2), ((3,), 4)])
def test_marked_tree_counts(degrees, expected):
    assert len(enumerate_marked_trees(DegreeFunction(degrees))) == expected


def test_phi_connected_keeps_tree_marks_root():
    R = phi(digraph(D1, CONNECTED))
    assert R == marked(D1, CONNECTED, 0)


def test_phi_opens_two_cycle():
    R = phi(digraph(D1, TWO_CYCLE))
    assert R == marked(D1, CONNECTED, 1)


def test_psi_examples():
    assert psi(marked(D1, CONNECTED, 1)) == digraph(D1, TWO_CYCLE)
    assert psi(marked(D1, CONNECTED, 0)) == digraph(D1, CONNECTED)


def test_psi_root_mark_leaves_arcs_unchanged():
    df = DegreeFunction((1, 2))
    for R in enumerate_marked_trees(df):
        if R.mark == 0:
            assert psi(R).arcs == R.arcs


def test_phi_rejects_broken_digraph():
    with pytest.raises(StructuralError):
        phi(digraph(D1, [(src(0), dst(0))]))  # t1 has no out-arc
    df = DegreeFunction((1, 0))
    bad = [(src(0), dst(1)), (src(1), dst(0)), (dst(1), src(1))]  # in-degrees (0, 1)
    with pytest.raises(StructuralError, match="in-degree"):
        phi(digraph(df, bad))


def test_psi_rejects_non_tree():
    with pytest.raises(StructuralError):
        psi(marked(D1, TWO_CYCLE, 1))


def test_round_trips_up_to_size_8():
    for df in degree_functions(7, 7, max_size=8):
        rep = bijection_check(df)
        assert rep.ok, df


@given(small_degree_functions())
def test_phi_lands_in_T_d(df):
    for S in enumerate_functional_digraphs(df):
        R = phi(S)
        check_marked(R)
        assert R.underlying().df == df


def test_orientation_reaches_root():
    df = DegreeFunction((1, 1))
    tree = make_tree(df, [(0, 0), (0, 1), (1, 1), (1, 2)])
    parent = orient(tree)
    assert parent[src(0)] == dst(0)
    assert parent[dst(2)] == src(1)

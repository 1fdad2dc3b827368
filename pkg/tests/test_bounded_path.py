import pytest
from hypothesis import given, strategies as st

from conftest import small_degree_functions
from transpoly.bounded_path import (
    _stage,
    apply_path,
    bounded_pivot_path,
    consistent_sources,
    make_source_consistent,
    next_source,
)
from transpoly.degree_core import DegreeFunction, edge_disjoint_pair, enumerate_trees, make_tree
from transpoly.errors import BoundViolation, IllegalMove, ValidationError
from transpoly.pivoting import PivotMove, bfs_distances, build_graph

D11 = DegreeFunction((1, 1))
S0 = make_tree(D11, [(0, 0), (0, 1), (1, 1), (1, 2)])
T1 = make_tree(D11, [(0, 0), (0, 2), (1, 1), (1, 2)])


def test_consistent_sources_examples():
    assert consistent_sources(S0, S0) == {0, 1}
    assert consistent_sources(S0, T1) == {1}
    a, b = edge_disjoint_pair(DegreeFunction((1, 1, 1)))
    assert consistent_sources(a, b) == frozenset()


def test_mismatched_degree_functions():
    other = make_tree(DegreeFunction((2, 0)), [(0, 0), (0, 1), (0, 2), (1, 0)])
    with pytest.raises(ValidationError):
        consistent_sources(S0, other)


def test_consistent_source_is_noop():
    assert make_source_consistent(S0, T1, 1) == (S0, T1, [])


def test_single_edge_difference_takes_one_pivot():
    S, T, moves = make_source_consistent(S0, T1, 0)
    assert len(moves) == 1 and S == T
    assert build_graph(D11).index(S0) is not None


def test_leaf_source_takes_one_pivot():
    df = DegreeFunction((2, 0))
    a, b, _ = enumerate_trees(df)
    S, T, moves = make_source_consistent(a, b, 1)
    assert len(moves) == 1 and S == T


def test_identical_trees_give_empty_certificate():
    cert = bounded_pivot_path(S0, S0)
    assert cert.total_length == 0 and cert.meeting_tree == S0


def test_disjoint_birkhoff_pair_is_tight():
    df = DegreeFunction((1, 1, 1))
    a, b = edge_disjoint_pair(df)
    cert = bounded_pivot_path(a, b)
    g = build_graph(df)
    assert cert.total_length == 6
    assert bfs_distances(g, g.index(a))[g.index(b)] == 6


def test_all_pairs_hexagon():
    g = build_graph(D11)
    for i, a in enumerate(g.trees):
        dist = bfs_distances(g, i)
        for j, b in enumerate(g.trees):
            cert = bounded_pivot_path(a, b)
            cert.verify()
            assert dist[j] <= cert.total_length <= 4


def sweep(df):
    trees = enumerate_trees(df)
    for a in trees:
        for b in trees:
            yield a, b


@given(small_degree_functions().filter(lambda df: min(df.degrees) >= 1))
def test_bound_holds_without_zero_degrees(df):
    for a, b in sweep(df):
        cert = bounded_pivot_path(a, b)
        assert cert.total_length <= 2 * (df.n - 1)
        for stage in cert.stages:
            assert stage.cost <= 2 * df.degrees[stage.source]


@given(small_degree_functions(max_m=4))
def test_stage_accounting(df):
    for a, b in sweep(df):
        cert = bounded_pivot_path(a, b, check_bound=False)
        assert apply_path(a, cert.walk()) == b
        for stage in cert.stages:
            d = df.degrees[stage.source]
            assert stage.cost <= 2 * d + 1
            if stage.cost == 2 * d + 1:
                # only when T started with none of mu's away-from-anchor edges
                assert stage.missing_at_start == stage.away_degree


def test_consistent_set_grows_per_stage():
    df = DegreeFunction((2, 1, 1))
    trees = enumerate_trees(df)
    for a in trees[::7]:
        for b in trees[::5]:
            S, T = a, b
            while (mu := next_source(S, T)) is not None:
                before = consistent_sources(S, T)
                S, T, _ = _stage(S, T, mu, 0)
                after = consistent_sources(S, T)
                assert before < after and mu in after


def test_zero_degree_sources_break_the_bound():
    # three leaf sources each need their own pivot, but 2(n-1) = 2
    df = DegreeFunction((1, 0, 0, 0))
    a = make_tree(df, [(0, 0), (0, 1), (1, 0), (2, 0), (3, 0)])
    b = make_tree(df, [(0, 0), (0, 1), (1, 1), (2, 1), (3, 1)])
    with pytest.raises(BoundViolation) as info:
        bounded_pivot_path(a, b)
    assert info.value.payload.total_length == 3


def test_apply_path_empty_and_replay():
    assert apply_path(S0, []) == S0
    a, b = edge_disjoint_pair(DegreeFunction((1, 1, 1)))
    cert = bounded_pivot_path(a, b)
    assert apply_path(a, cert.moves_on_S) == cert.meeting_tree
    assert apply_path(b, cert.moves_on_T) == cert.meeting_tree
    walk = cert.walk()
    assert apply_path(a, walk) == b
    assert apply_path(b, [mv.inverse() for mv in reversed(walk)]) == a


def test_apply_path_names_bad_step():
    good = PivotMove((0, 2), (0, 1))
    with pytest.raises(IllegalMove) as info:
        apply_path(S0, [good, good])
    assert info.value.step == 1
    with pytest.raises(IllegalMove, match="step 0"):
        apply_path(S0, [PivotMove((0, 2), (0, 0))])


@given(st.data())
def test_certificate_replays(data):
    df = DegreeFunction((2, 1))
    trees = enumerate_trees(df)
    a = data.draw(st.sampled_from(trees))
    b = data.draw(st.sampled_from(trees))
    cert = bounded_pivot_path(a, b)
    cert.verify()
    assert cert == bounded_pivot_path(a, b)

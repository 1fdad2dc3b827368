import pytest
from hypothesis import given, strategies as st

from conftest import small_degree_functions
from oracles import brute_trees
from transpoly.degree_core import (
    DegreeFunction,
    count_trees,
    degree_functions,
    edge_disjoint_pair,
    enumerate_trees,
    make_degree_function,
    make_tree,
    parse_degrees,
    parse_tree,
    tree_violation,
)
from transpoly.errors import InstanceTooLarge, ValidationError


@pytest.mark.parametrize(
    "degrees, m, n, e",
    [([1, 1], 2, 3, 4), ([2], 1, 3, 3), ([2, 0], 2, 3, 4), ([0], 1, 1, 1)],
)
def test_derived_sizes(degrees, m, n, e):
    df = make_degree_function(degrees)
    assert (df.m, df.n, df.e) == (m, n, e)
    assert df.e == sum(1 + d for d in degrees)


@pytest.mark.parametrize("bad, index", [([1, -1], 1), ([-2], 0), ([0, 0, -1], 2)])
def test_negative_degree_names_index(bad, index):
    with pytest.raises(ValidationError, match=f"index {index}"):
        make_degree_function(bad)


def test_empty_and_non_integer_rejected():
    with pytest.raises(ValidationError):
        make_degree_function([])
    with pytest.raises(ValidationError, match="index 1"):
        parse_degrees("1,x")


def test_single_source_star():
    (tree,) = enumerate_trees(DegreeFunction((1,)))
    assert tree.edges == ((0, 0), (0, 1))


@pytest.mark.parametrize(
    "degrees, expected",
    [((1, 1), 6), ((2, 0), 3), ((1, 1, 1), 96), ((2, 1), 12), ((0,), 1), ((4,), 1)],
)
def test_count_examples(degrees, expected):
    # expected values come from brute_trees over all e-subsets of K_{m,n}
    df = DegreeFunction(degrees)
    assert count_trees(df) == expected
    if len(degrees) > 1 or degrees[0] < 3:
        assert len(enumerate_trees(df)) == expected


def test_two_zero_source_trees_attach_anywhere():
    trees = enumerate_trees(DegreeFunction((2, 0)))
    assert [t.edges for t in trees] == [
        ((0, 0), (0, 1), (0, 2), (1, t)) for t in range(3)
    ]


@pytest.mark.parametrize("degrees", [(1,), (1, 1), (2, 0), (0, 2), (1, 1, 1), (2, 1), (1, 0, 1), (0, 0, 1), (3, 0)])
def test_enumeration_matches_brute_force(degrees):
    df = DegreeFunction(degrees)
    assert [t.edges for t in enumerate_trees(df)] == brute_trees(degrees)


def test_counts_agree_up_to_size_10():
    for df in degree_functions(9, 9, max_size=10):
        trees = enumerate_trees(df)
        assert len(trees) == count_trees(df), df
        assert all(a.edges < b.edges for a, b in zip(trees, trees[1:]))


@given(small_degree_functions())
def test_enumerated_trees_pass_validator(df):
    for tree in enumerate_trees(df):
        assert tree_violation(df, tree.edges) is None
        assert all(len(tree.incident(s)) == 1 + d for s, d in enumerate(df.degrees))


@given(st.lists(st.integers(0, 6), min_size=1, max_size=6))
def test_formula_divides_exactly(degrees):
    assert count_trees(DegreeFunction(tuple(degrees))) >= 1


def test_size_guard_reports_estimate():
    with pytest.raises(InstanceTooLarge) as info:
        enumerate_trees(DegreeFunction((3, 3, 3)), limit=1000)
    assert info.value.estimate > 1000
    assert "too large" in str(info.value)


def test_tree_text_format_round_trip():
    df = DegreeFunction((1, 1))
    tree = parse_tree("1:2,0:0,1:1,0:1", df)
    assert tree.encode() == "0:0,0:1,1:1,1:2"
    with pytest.raises(ValidationError):
        parse_tree("0:0,0:1,1:0,1:1", df)  # closes a 4-cycle
    with pytest.raises(ValidationError):
        parse_tree("0-0", df)


def test_make_tree_rejects_wrong_degree():
    with pytest.raises(ValidationError, match="degree"):
        make_tree(DegreeFunction((1, 1)), [(0, 0), (0, 1), (0, 2), (1, 2)])


def test_disjoint_pair_birkhoff_3x4():
    a, b = edge_disjoint_pair(DegreeFunction((1, 1, 1)))
    assert not (a.edge_set & b.edge_set)
    assert len(a.edge_set ^ b.edge_set) == 12


def test_disjoint_pair_birkhoff_4x5():
    a, b = edge_disjoint_pair(DegreeFunction((1, 1, 1, 1)))
    assert not (a.edge_set & b.edge_set)


@pytest.mark.parametrize("degrees", [(1, 1), (3,), (0,)])
def test_no_disjoint_pair(degrees):
    assert edge_disjoint_pair(DegreeFunction(degrees)) is None

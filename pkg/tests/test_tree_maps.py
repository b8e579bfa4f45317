from fractions import Fraction

import pytest

from catalan_zeta.core import (
    DyckPath,
    NotCanonicalError,
    PlaneTree,
    Poset,
    area_vector,
    canonical_form,
    is_canonical,
    poset_from_starting_set,
)
from catalan_zeta.tree_maps import (
    breadth_index,
    breadth_order,
    check_parent_condition,
    lambda_bounce,
    lambda_poset,
    lambda_steep,
    node_value,
    parent_gaps,
    starting_set_of_tree,
    steep_depths,
    xi_bounce,
    xi_poset,
    xi_steep,
)
from catalan_zeta.verify import enumerate_dyck, enumerate_posets, enumerate_trees

import oracles

T = PlaneTree.parse


def test_node_value_worked_example():
    assert node_value((3, 2, 1), 4) == Fraction(769, 216)


@pytest.mark.parametrize(
    "text, values",
    [
        ("(())", [Fraction(4, 3)]),
        ("(()())", [Fraction(5, 4), Fraction(3, 2)]),
        ("((()()))", [Fraction(5, 4), Fraction(2) + Fraction(1, 4) + Fraction(1, 16),
                      Fraction(2) + Fraction(1, 4) + Fraction(2, 16)]),
    ],
)
def test_starting_set_examples(text, values):
    assert starting_set_of_tree(T(text)) == values


def test_node_value_rejects_out_of_range_index():
    with pytest.raises(ValueError):
        node_value((5,), 4)


@pytest.mark.parametrize("n", range(1, 9))
def test_values_decrease_left_to_right_within_depth(n):
    for t in enumerate_trees(n):
        m = t.max_arity
        by_depth = {}
        nodes = []

        def walk(node, path):
            k = node.arity
            for i, child in enumerate(node.children):
                p = path + (k - i,)
                nodes.append((len(p), node_value(p, m)))
                walk(child, p)

        walk(t, ())
        for depth, v in nodes:
            by_depth.setdefault(depth, []).append(v)
        # preorder visits each depth left to right
        for vals in by_depth.values():
            assert all(a > b for a, b in zip(vals, vals[1:]))


@pytest.mark.parametrize(
    "text, poset",
    [
        ("(()())", Poset(2)),
        ("((()))", Poset(2, {(1, 2)})),
        ("((()()))", Poset(3, {(1, 2), (1, 3)})),
        ("()", Poset(0)),
    ],
)
def test_xi_and_lambda_poset_examples(text, poset):
    assert xi_poset(T(text)) == poset
    assert lambda_poset(poset) == T(text)


@pytest.mark.parametrize("n", range(0, 10))
def test_fast_xi_poset_matches_fraction_route(n):
    for t in enumerate_trees(n):
        p = xi_poset(t)
        assert p == poset_from_starting_set(starting_set_of_tree(t))
        assert is_canonical(p)
        assert canonical_form(p) == p


@pytest.mark.parametrize("n", range(0, 11))
def test_poset_round_trips(n):
    for t in enumerate_trees(n):
        p = xi_poset(t)
        assert lambda_poset(p) == t
        assert xi_poset(lambda_poset(p)) == p


def test_lambda_poset_rejects_non_canonical():
    with pytest.raises(NotCanonicalError):
        lambda_poset(Poset(2, {(2, 1)}))
    with pytest.raises(NotCanonicalError):
        lambda_poset(Poset(4, {(1, 2), (3, 4)}))


def test_lambda_poset_parents_literal():
    # label k sits at the k-th node in breadth order; its parent carries the
    # largest label below k, and siblings appear by decreasing label
    for p in enumerate_posets(7):
        t = lambda_poset(p)
        label = {id(v): k for k, v in enumerate(breadth_order(t), 1)}
        label[id(t)] = 0
        stack = [t]
        while stack:
            node = stack.pop()
            kids = [label[id(c)] for c in node.children]
            assert kids == sorted(kids, reverse=True)
            for c in node.children:
                below = [j for j in range(1, p.n + 1) if (j, label[id(c)]) in p.relations]
                assert label[id(node)] == (max(below) if below else 0)
                stack.append(c)


@pytest.mark.parametrize("text", ["((()()))", "(())", "()"])
def test_parent_condition_examples(text):
    assert check_parent_condition(T(text))


@pytest.mark.parametrize("n", range(1, 9))
def test_parent_condition_exhaustive(n):
    assert all(check_parent_condition(t) for t in enumerate_trees(n))


@pytest.mark.parametrize("n", range(1, 9))
def test_parent_gap_bounds(n):
    for t in enumerate_trees(n):
        base = t.max_arity + 2
        for gap, depth in parent_gaps(t):
            assert 1 < gap < 1 + Fraction(1, base ** (depth - 1))


# --- steep ----------------------------------------------------------------


@pytest.mark.parametrize(
    "text, steps",
    [("(()())", "NENE"), ("((()))", "NNEE"), ("((()()))", "NNENEE"), ("(())", "NE"), ("()", "")],
)
def test_steep_examples(text, steps):
    assert xi_steep(T(text)) == DyckPath(steps)
    assert lambda_steep(DyckPath(steps)) == T(text)


def test_steep_walks_right_child_first():
    # root with a leaf on the left and a 1-child node on the right
    assert xi_steep(T("(()(()))")) == DyckPath("NNEENE")


@pytest.mark.parametrize("n", range(0, 11))
def test_steep_round_trips(n):
    for d in enumerate_dyck(n):
        t = lambda_steep(d)
        assert xi_steep(t) == d
        assert t.size == n


@pytest.mark.parametrize("n", range(0, 9))
def test_trees_are_all_distinct_plane_trees(n):
    expected = {t.encode() for t in oracles.trees_by_recursion(n)}
    got = [t.encode() for t in enumerate_trees(n)]
    assert len(got) == len(set(got)) and set(got) == expected


@pytest.mark.parametrize("n", range(1, 11))
def test_steep_depth_is_area_plus_one(n):
    for d in enumerate_dyck(n):
        assert steep_depths(lambda_steep(d)) == [a + 1 for a in area_vector(d)]


# --- bounce ---------------------------------------------------------------


@pytest.mark.parametrize(
    "text, steps",
    [("((()()))", "NENNEE"), ("(()())", "NNEE"), ("((()))", "NENE"), ("(())", "NE"), ("()", "")],
)
def test_bounce_examples(text, steps):
    assert xi_bounce(T(text)) == DyckPath(steps)
    assert lambda_bounce(DyckPath(steps)) == T(text)


@pytest.mark.parametrize("n", range(0, 10))
def test_bounce_matches_literal_breadth_index(n):
    for t in enumerate_trees(n):
        assert xi_bounce(t) == oracles.xi_bounce_literal(t)


@pytest.mark.parametrize("n", range(0, 11))
def test_bounce_round_trips(n):
    for d in enumerate_dyck(n):
        t = lambda_bounce(d)
        assert xi_bounce(t) == d
        assert lambda_bounce(xi_bounce(lambda_steep(d))) == lambda_steep(d)


def test_breadth_index_decomposition():
    sizes = [2, 3, 1]
    got = [breadth_index(k, sizes) for k in range(1, 7)]
    assert got == [(1, 1), (1, 0), (2, 2), (2, 1), (2, 0), (3, 0)]
    with pytest.raises(ValueError):
        breadth_index(7, sizes)

import random

from hypothesis import given, strategies as st

from wcolgeo.graph import Ordering, complete_graph, cycle_graph, empty_graph, path_graph, star_graph
from wcolgeo.instances import all_graphs, random_graph, random_ordering
from wcolgeo.oracles import naive_colnum, naive_decr, naive_sreach, naive_wreach
from wcolgeo.reach import (
    colnum_ordered,
    decr,
    decreasing_tree_depth,
    reach_sizes,
    sreach,
    verify_diameter_condition,
    vertex_separation,
    wreach,
    wreach_all,
)

IDENT3 = Ordering.identity(3)


def test_k0_is_singleton():
    g = complete_graph(4)
    o = Ordering.identity(4)
    for v in range(4):
        assert wreach(g, o, 0, v) == sreach(g, o, 0, v) == decr(g, o, 0, v) == {v}


def test_complete_graph_last_vertex_reaches_all():
    for n in (1, 3, 5):
        g, o = complete_graph(n), Ordering.from_sequence(random.Random(n).sample(range(n), n))
        last = o.sequence[-1]
        assert wreach(g, o, 1, last) == sreach(g, o, 1, last) == set(range(n))
        assert colnum_ordered(g, o, 1) == n


def test_path_examples():
    # a-b-c with a < b < c
    g = path_graph(3)
    assert wreach(g, IDENT3, 2, 2) == {0, 1, 2}
    assert sreach(g, IDENT3, 2, 2) == {1, 2}


def test_decr_examples():
    g = path_graph(5)
    assert decr(g, Ordering.identity(5), 3, 4) == {1, 2, 3, 4}
    s = star_graph(4)  # centre 0
    o = Ordering.from_sequence([1, 2, 3, 4, 0])
    assert decr(s, o, 1, 0) == set(range(5))


def test_colnum_path():
    assert colnum_ordered(path_graph(5), Ordering.identity(5), 2) == 3
    assert naive_colnum(path_graph(5), Ordering.identity(5), 2) == 3


def test_at_least_certificate():
    g = complete_graph(6)
    o = Ordering.identity(6)
    assert colnum_ordered(g, o, 1, at_least=3) >= 3
    assert colnum_ordered(g, o, 1, at_least=100) == 6


def test_tree_depth_examples():
    s = star_graph(4)
    assert decreasing_tree_depth(s, Ordering.from_sequence([1, 2, 3, 4, 0])) == 1
    assert decreasing_tree_depth(path_graph(6), Ordering.identity(6)) == 5
    assert decreasing_tree_depth(empty_graph(2), Ordering.identity(2)) is None


def test_diameter_condition_examples():
    assert verify_diameter_condition(complete_graph(5), Ordering.identity(5), 1)
    assert not verify_diameter_condition(empty_graph(3), Ordering.identity(3), 5)
    # the two-vertex suffix {3, 4} of a path ordered 0 < ... < 4 is fine, {1,...,4} needs distance 3
    assert verify_diameter_condition(path_graph(5), Ordering.from_sequence([0, 4, 1, 3, 2]), 4)
    assert not verify_diameter_condition(path_graph(5), Ordering.from_sequence([2, 0, 1, 3, 4]), 4)


def test_vertex_separation_small():
    assert vertex_separation(path_graph(5), Ordering.identity(5)) == 1
    assert vertex_separation(star_graph(3), Ordering.identity(4)) == 1
    assert vertex_separation(complete_graph(5), Ordering.identity(5)) == 4


def _naive_separation(g, o):
    pos = o.position
    return max(
        sum(1 for y in range(g.n) if pos[y] < pos[x] and any(pos[z] >= pos[x] for z in g.adjacency[y]))
        for x in range(g.n)
    )


def test_reach_agrees_with_paths_exhaustively():
    for n in range(1, 6):
        for g in all_graphs(n):
            o = random_ordering(n, random.Random(g.m * 31 + n))
            for k in (1, 2, 3):
                w = wreach_all(g, o, k)
                for v in range(n):
                    assert wreach(g, o, k, v) == w[v] == naive_wreach(g, o, k, v)
                    assert sreach(g, o, k, v) == naive_sreach(g, o, k, v)
                    assert decr(g, o, k, v) == naive_decr(g, o, k, v)
            assert vertex_separation(g, o) == _naive_separation(g, o)


@st.composite
def ordered_graphs(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    seed = draw(st.integers(0, 10**6))
    rng = random.Random(seed)
    g = random_graph(n, draw(st.floats(0.1, 0.9)), rng)
    return g, random_ordering(n, rng)


@given(ordered_graphs(), st.integers(0, 4))
def test_reach_matches_oracles(go, k):
    g, o = go
    for v in range(g.n):
        assert wreach(g, o, k, v) == naive_wreach(g, o, k, v)
        assert sreach(g, o, k, v) == naive_sreach(g, o, k, v)
        assert decr(g, o, k, v) == naive_decr(g, o, k, v)


@given(ordered_graphs(), st.integers(1, 4))
def test_reach_inclusions(go, k):
    g, o = go
    for v in range(g.n):
        s, w = sreach(g, o, k, v), wreach(g, o, k, v)
        assert decr(g, o, k, v) <= w
        assert s <= w
        assert w <= wreach(g, o, k + 1, v)
        assert all(o.position[u] <= o.position[v] for u in w)


@given(ordered_graphs(), st.integers(1, 4), st.integers(1, 8))
def test_at_least_is_sound(go, k, target):
    g, o = go
    full = colnum_ordered(g, o, k)
    cert = colnum_ordered(g, o, k, at_least=target)
    assert cert <= full
    assert (cert >= target) == (full >= target)


def test_reach_sizes_kinds():
    g, o = cycle_graph(5), Ordering.identity(5)
    assert reach_sizes(g, o, 2, "weak") == [len(naive_wreach(g, o, 2, v)) for v in range(5)]
    assert reach_sizes(g, o, 2, "strong") == [len(naive_sreach(g, o, 2, v)) for v in range(5)]

import json
import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from wcolgeo.exact import BudgetExhausted, coloring_number, degeneracy_ordering, scol_exact, wcol_exact
from wcolgeo.geometry import Box, Representation, intersects
from wcolgeo.graph import Graph, Ordering, complete_graph, cycle_graph, empty_graph, intersection_graph, path_graph, sizewise_order
from wcolgeo.instances import all_graphs, random_graph, random_thin_balls, random_thin_cubes
from wcolgeo.oracles import exhaustive_colnum, peeling_degeneracy
from wcolgeo.reach import colnum_ordered


def test_graph_basics_and_json():
    g = Graph.from_edges(4, [(0, 1), (2, 1), (1, 0)], labels="abcd")
    assert g.edges() == [(0, 1), (1, 2)]
    assert g.has_edge(2, 1) and not g.has_edge(0, 3)
    again = Graph.from_json(g.to_json())
    assert again == g
    assert json.loads(g.to_json()) == {"n": 4, "labels": ["a", "b", "c", "d"], "edges": [[0, 1], [1, 2]]}
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(1, 1)])
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 2)])


def test_ordering_round_trips():
    o = Ordering.from_sequence([2, 0, 1])
    assert o.position == (1, 2, 0)
    assert Ordering.from_positions(o.position) == o
    g = Graph.from_edges(3, [], labels="xyz")
    assert Ordering.from_labels(g, o.to_labels(g)) == o
    assert o.precedes(2, 0)
    with pytest.raises(ValueError):
        Ordering.from_sequence([0, 0, 1])


def test_dot_export():
    dot = path_graph(3).to_dot(Ordering.identity(3))
    assert dot.startswith("graph G {") and "0 -- 1;" in dot and "1 -- 2;" in dot


def test_intersection_graph_examples():
    ivs = Representation(tuple(Box([i], [i + 1]) for i in range(3)))
    assert intersection_graph(ivs).edges() == [(0, 1), (1, 2)]
    far = Representation(tuple(Box([3 * i, 0], [3 * i + 1, 1]) for i in range(5)))
    assert intersection_graph(far).m == 0


def test_sizewise_examples():
    rep = Representation((Box([0], [2]), Box([0], [3]), Box([0], [1])))
    assert sizewise_order(rep).sequence == (1, 0, 2)
    same = Representation(tuple(Box([i], [i + 1]) for i in range(4)))
    assert sizewise_order(same).sequence == (0, 1, 2, 3)


@given(st.integers(0, 10**6), st.integers(1, 3), st.booleans())
def test_intersection_graph_matches_pairwise_scan(seed, t, balls):
    rng = random.Random(seed)
    rep = random_thin_balls(15, t, 2, rng) if balls else random_thin_cubes(15, t, 2, rng, sides=(1, 2))
    naive = [(i, j) for i, j in combinations(range(len(rep)), 2) if intersects(rep[i], rep[j])]
    assert intersection_graph(rep).edges() == naive


def test_exact_examples():
    assert wcol_exact(path_graph(3), 1).value == 2
    assert scol_exact(path_graph(3), 1).value == 2
    for k in (1, 2, 3):
        assert wcol_exact(complete_graph(4), k).value == 4
        assert scol_exact(complete_graph(4), k).value == 4
    c4 = cycle_graph(4)
    assert wcol_exact(c4, 2).value == exhaustive_colnum(c4, 2, "weak") == 3
    assert scol_exact(c4, 2).value == exhaustive_colnum(c4, 2, "strong") == 3


def test_exact_result_ordering_attains_value():
    g = random_graph(7, 0.5, random.Random(3))
    for k in (1, 2, 3):
        res = wcol_exact(g, k)
        assert colnum_ordered(g, res.ordering, k) == res.value


def test_budget_exhaustion_reports_bracket():
    g = random_graph(11, 0.45, random.Random(5))
    with pytest.raises(BudgetExhausted) as info:
        wcol_exact(g, 3, budget=1)
    exc = info.value
    assert exc.lower <= exc.upper
    assert colnum_ordered(g, exc.ordering, 3) == exc.upper


def test_degeneracy_ordering_property():
    for g in all_graphs(4):
        d, o = degeneracy_ordering(g)
        assert d == peeling_degeneracy(g)
        pos = o.position
        assert all(sum(pos[w] < pos[v] for w in g.adjacency[v]) <= d for v in range(g.n))
    assert coloring_number(empty_graph(3)) == 1


@settings(max_examples=60)
@given(st.integers(1, 6), st.integers(0, 10**6), st.integers(1, 3))
def test_exact_matches_exhaustive(n, seed, k):
    g = random_graph(n, random.Random(seed).uniform(0.2, 0.9), random.Random(seed + 1))
    assert wcol_exact(g, k).value == exhaustive_colnum(g, k, "weak")
    assert scol_exact(g, k).value == exhaustive_colnum(g, k, "strong")

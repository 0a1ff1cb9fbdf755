import math
from fractions import Fraction as F
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from wcolgeo.coloring import greedy_interval_coloring
from wcolgeo.constructions import (
    ConstructionBudgetError,
    ScaffoldResult,
    build_theorem_lb_instance,
    gen_fprime,
    gen_hprime,
    lift_dimension,
    scaffold_boxes,
    scaffold_graph,
    scaffold_size,
    touching_lift,
)
from wcolgeo.geometry import (
    Box,
    GeometryError,
    Representation,
    interiors_overlap,
    intersects,
    is_comparable_boxes,
    is_m_shrinking,
    pairwise_interiors_disjoint,
    thinness,
)
from wcolgeo.graph import Graph, Ordering, complete_graph, intersection_graph, sizewise_order
from wcolgeo.reach import colnum_ordered, decreasing_tree_depth, verify_diameter_condition


def sized(rep):
    seq = sizewise_order(rep).sequence
    return Representation(tuple(rep.objects[v] for v in seq))


def test_fprime_base_case():
    rep = gen_fprime(0, 5)
    assert rep.objects == (Box([0, 0], [1, 1]),)


def test_fprime_k2():
    rep = gen_fprime(2, 7)
    assert len(rep) == 7
    assert pairwise_interiors_disjoint(rep)
    assert is_m_shrinking(sized(rep), 7)
    assert is_comparable_boxes(rep)


def test_fprime_k1_is_a_triangle():
    # the second copy's lower side lies on the line through the first copy's upper side
    rep = gen_fprime(1, 3)
    g = intersection_graph(rep)
    assert g.n == 3 and g.m == 3
    root = sizewise_order(rep).sequence[-1]
    assert g.degree(root) == 2
    assert rep.objects[root] == Box([0, 0], [1, 1])
    assert decreasing_tree_depth(g, sizewise_order(rep)) == 1


@pytest.mark.parametrize("k", range(4))
def test_fprime_structure(k):
    m = 2 ** (k + 1) - 1
    rep = gen_fprime(k, m)
    g, o = intersection_graph(rep), sizewise_order(rep)
    assert o.sequence == tuple(range(len(rep)))
    assert decreasing_tree_depth(g, o) <= k
    assert verify_diameter_condition(g, o, 2 * k)
    assert colnum_ordered(g, o, k) == len(rep)


def test_hprime_examples():
    for t in (1, 2, 5):
        assert gen_hprime(0, t, 3).objects == (Box([0], [1]),)
    path = gen_hprime(3, 1, 4)
    g = intersection_graph(path)
    assert len(path) == 4 and thinness(path) == 1
    assert g.m == 3 and sorted(g.degree(v) for v in range(4)) == [1, 1, 2, 2]
    h = gen_hprime(2, 2, 6)
    assert len(h) == 6 and thinness(h) <= 2 and is_m_shrinking(h, 6)
    assert sizewise_order(h).sequence == tuple(range(6))
    assert colnum_ordered(intersection_graph(gen_hprime(2, 1, 3)), sizewise_order(gen_hprime(2, 1, 3)), 2) == 3


@pytest.mark.parametrize("k,t", [(k, t) for k in range(4) for t in range(1, 4)])
def test_hprime_colorable(k, t):
    rep = gen_hprime(k, t, math.comb(k + t, t))
    assert max(greedy_interval_coloring(rep)) + 1 <= t + 1


def test_scaffold_examples():
    single = scaffold_graph(Graph.from_edges(1, []), Ordering.identity(1), 4)
    assert single.graph.n == 1
    star = scaffold_graph(complete_graph(2), Ordering.identity(2), 2)
    assert star.graph.n == 3 and star.graph.edges() == [(0, 1), (0, 2)]
    assert star.parent == (-1, 0, 0) and star.level == (0, 1, 1)
    assert scaffold_size(3, 3) == 13
    assert scaffold_graph(complete_graph(3), Ordering.identity(3), 3).graph.n == 13


def _naive_scaffold_edges(H, order, res):
    seq = order.sequence
    out = []
    for y, x in combinations(range(res.graph.n), 2):
        ly, lx = res.level[y], res.level[x]
        if ly < lx and res.word[x][:ly] == res.word[y] and H.has_edge(seq[ly], seq[lx]):
            out.append((y, x))
    return out


@settings(max_examples=30)
@given(st.integers(1, 4), st.integers(1, 3), st.integers(0, 63), st.permutations(range(4)))
def test_scaffold_adjacency_rule(n, m, mask, perm):
    pairs = list(combinations(range(n), 2))
    H = Graph.from_edges(n, [e for i, e in enumerate(pairs) if mask >> i & 1])
    order = Ordering.from_sequence([p for p in perm if p < n])
    res = scaffold_graph(H, order, m)
    assert res.graph.n == scaffold_size(n, m)
    assert res.graph.edges() == _naive_scaffold_edges(H, order, res)
    for x in range(1, res.graph.n):
        assert res.is_ancestor(res.parent[x], x)
        assert res.base[x] == order.sequence[res.level[x]]


def test_scaffold_json_round_trip():
    res = scaffold_graph(complete_graph(3), Ordering.from_sequence([2, 0, 1]), 2)
    again = ScaffoldResult.from_dict(res.to_dict())
    assert again == res


def test_scaffold_boxes_single():
    rep = Representation((Box([0, 0], [2, 3]),))
    out = scaffold_boxes(rep, 5)
    assert out.objects == (Box([0, 0, 0], [2, 3, 3]),)


def test_scaffold_boxes_two_intervals():
    rep = gen_hprime(1, 1, 2)
    boxes = scaffold_boxes(rep, 2)
    res = scaffold_graph(intersection_graph(rep), sizewise_order(rep), 2)
    assert len(boxes) == 3 and boxes.dimension == 2
    assert intersection_graph(boxes).edges() == res.graph.edges()


@pytest.mark.parametrize("family", ["F1", "H11", "H21", "H12"])
def test_scaffold_boxes_nesting_and_graph(family):
    rep, m = {"F1": (gen_fprime(1, 3), 3), "H11": (gen_hprime(1, 1, 2), 2),
              "H21": (gen_hprime(2, 1, 3), 3), "H12": (gen_hprime(1, 2, 3), 3)}[family]
    boxes = scaffold_boxes(rep, m)
    res = scaffold_graph(intersection_graph(rep), sizewise_order(rep), m)
    assert intersection_graph(boxes).edges() == res.graph.edges()
    assert boxes.labels == res.graph.labels
    last = boxes.dimension - 1
    for y, x in combinations(range(len(boxes)), 2):
        iy = (boxes[y].lo[last], boxes[y].hi[last])
        ix = (boxes[x].lo[last], boxes[x].hi[last])
        if res.is_ancestor(y, x):
            assert iy[0] <= ix[0] and ix[1] <= iy[1]
        elif not res.is_ancestor(x, y):
            assert ix[1] < iy[0] or iy[1] < ix[0]
    assert thinness(boxes) <= (rep.declared_thinness or 1)


def test_scaffold_boxes_refuses_bad_input():
    incomparable = Representation((Box([0, 0], [1, 3]), Box([5, 5], [7, 7])))
    with pytest.raises(GeometryError, match="comparable"):
        scaffold_boxes(incomparable, 2)
    not_shrinking = Representation((Box([0], [4]), Box([5], [7])))
    with pytest.raises(GeometryError, match="shrinking"):
        scaffold_boxes(not_shrinking, 2)


def test_lift_examples():
    a, b = Box([0, 0], [1, 1]), Box([F(1, 2), 0], [F(3, 2), 1])
    rep = Representation((a, b))
    lifted = lift_dimension(rep, {1})
    assert lifted.dimension == 3
    assert not interiors_overlap(lifted[0], lifted[1]) and intersects(lifted[0], lifted[1])
    up = lift_dimension(rep, {0, 1})
    down = lift_dimension(rep, set())
    assert intersection_graph(up).edges() == intersection_graph(rep).edges()
    assert all(u.lo[2] == -d.hi[2] and u.hi[2] == -d.lo[2] for u, d in zip(up, down))
    with pytest.raises(GeometryError):
        lift_dimension(Representation((Box([0, 0], [1, 2]),)), {0})


def test_touching_lift():
    touching = Representation(tuple(Box([i, 0], [i + 1, 1]) for i in range(3)))
    out = touching_lift(touching, [0, 1, 0], bits=1)
    assert out.dimension == 3 and thinness(out) == 1
    assert intersection_graph(out).edges() == intersection_graph(touching).edges()
    with pytest.raises(GeometryError, match="proper"):
        touching_lift(touching, [0, 0, 1])


def test_lb_instances():
    F1 = build_theorem_lb_instance("F", 1)
    assert F1.scaffold.graph.n == 13 and F1.expected == 3 and F1.radius == 2
    H11 = build_theorem_lb_instance("H", 1, t=1)
    assert H11.scaffold.graph.n == 3 and H11.expected == 2
    with pytest.raises(ValueError):
        build_theorem_lb_instance("H", 1, t=2, d=1)


def test_lb_instance_h22():
    inst = build_theorem_lb_instance("H", 2, t=2)
    assert inst.scaffold.graph.n == (6**6 - 1) // 5 == 9331 and inst.expected == 6


def test_budget_errors():
    with pytest.raises(ConstructionBudgetError):
        scaffold_graph(complete_graph(6), Ordering.identity(6), 6, budget=100)
    with pytest.raises(ConstructionBudgetError):
        scaffold_boxes(gen_hprime(2, 2, 6), 6, budget=100)

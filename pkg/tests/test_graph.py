import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from intdom import graph as gr
from intdom.graph import EdgeListError, Graph, GraphError, dominates, parse_edge_list, serialize_edge_list
from intdom.multiset import Multiset as M


@st.composite
def graphs(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


def multisets_over(n):
    return st.lists(st.integers(0, n - 1), max_size=8).map(M)


def test_closed_neighborhood():
    assert gr.path(3).closed_neighborhood(1) == {0, 1, 2}
    assert Graph(3).closed_neighborhood(2) == {2}
    assert gr.complete(4).closed_neighborhood(3) == {0, 1, 2, 3}
    with pytest.raises(GraphError):
        gr.path(3).closed_neighborhood(3)


def test_graph_rejects_bad_edges():
    with pytest.raises(GraphError):
        Graph(2, [(0, 0)])
    with pytest.raises(GraphError):
        Graph(2, [(0, 1), (1, 0)])
    with pytest.raises(GraphError):
        Graph(2, [(0, 2)])


def test_dominates_examples():
    p3 = gr.path(3)
    assert dominates(p3, M([1]), M([0, 1, 2]))
    assert not dominates(p3, M([1]), M([0, 0]))
    assert dominates(p3, M(), M())
    with pytest.raises(GraphError):
        dominates(p3, M([5]), M([0]))


def test_generators():
    assert gr.path(4).edges() == ((0, 1), (1, 2), (2, 3))
    assert gr.complete(3).num_edges == 3
    u = gr.disjoint_union(gr.path(4), gr.complete(1))
    assert (u.n, u.num_edges) == (5, 3)
    assert gr.cycle(4).edges() == ((0, 1), (0, 3), (1, 2), (2, 3))
    assert gr.star(4).edges() == ((0, 1), (0, 2), (0, 3))
    assert gr.grid(2, 3).num_edges == 7
    assert gr.generate("grid", rows=2, cols=2).edges() == ((0, 1), (0, 2), (1, 3), (2, 3))


@pytest.mark.parametrize("family,args", [
    ("path", (0,)), ("cycle", (2,)), ("complete", (0,)), ("star", (0,)), ("grid", (0, 3)),
    ("random_gnp", (3, 1.5, 1)), ("random_gnp", (3, 0.5, -1)), ("random_gnp", (3, 0.5, 2**64)),
    ("nonsense", (3,)),
])
def test_generator_parameter_errors(family, args):
    with pytest.raises(GraphError):
        gr.generate(family, *args)


def test_random_gnp_reproducible():
    a = gr.random_gnp(8, 0.4, 12345)
    assert a == gr.random_gnp(8, 0.4, 12345)
    assert gr.random_gnp(6, 0.0, 7).num_edges == 0
    assert gr.random_gnp(6, 1.0, 7) == gr.complete(6)


def test_random_gnp_follows_documented_stream():
    rng = random.Random(42)
    expected = tuple((u, v) for u in range(5) for v in range(u + 1, 5) if rng.random() < 0.5)
    assert gr.random_gnp(5, 0.5, 42).edges() == expected


def test_parse_edge_list():
    assert parse_edge_list("n 2\ne 0 1") == gr.complete(2)
    g = parse_edge_list("# iso\n\nn 3\n")
    assert (g.n, g.num_edges) == (3, 0)


@pytest.mark.parametrize("text,lineno,fragment", [
    ("n 2\ne 0 0", 2, "self-loop"),
    ("n 3\ne 0 1\ne 1 0", 3, "duplicate"),
    ("n 2\ne 0 2", 2, "out of range"),
    ("e 0 1", 1, "header"),
    ("# c\nn x", 2, "integer"),
    ("n 2\nedge 0 1", 2, "expected"),
    ("", 1, "missing"),
])
def test_parse_errors_name_the_line(text, lineno, fragment):
    with pytest.raises(EdgeListError) as info:
        parse_edge_list(text)
    assert info.value.lineno == lineno
    assert fragment in str(info.value)


@given(graphs())
def test_edge_list_round_trip(g):
    assert parse_edge_list(serialize_edge_list(g)) == g


@given(graphs())
def test_adjacency_symmetric(g):
    for u in g.vertices():
        for v in g.neighbors(u):
            assert u in g.neighbors(v) and u != v


@given(st.data())
def test_domination_properties(data):
    g = data.draw(graphs())
    a = data.draw(multisets_over(g.n))
    b = data.draw(multisets_over(g.n))
    extra = data.draw(multisets_over(g.n))
    assert dominates(g, a, M())
    if b:
        assert not dominates(g, M(), b)
    if dominates(g, a, b):
        sub = data.draw(st.sampled_from(b.elements())) if b else None
        if sub is not None:
            assert dominates(g, a, b.remove_one(sub))
        assert dominates(g, a + extra, b)

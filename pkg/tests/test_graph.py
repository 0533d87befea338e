import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from k2tspread.graph import (
    Graph,
    canonical_form,
    canonical_graph,
    circulant,
    complete_bipartite,
    copies,
    disjoint_union,
    extremal_graph,
    from_graph6,
    join,
    make_complete,
    make_cycle,
    make_empty,
    make_path,
    read_graph6_file,
    to_graph6,
    write_graph6_file,
)


@st.composite
def graphs(draw, max_n=9, min_n=0):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, c in zip(pairs, chosen) if c])


def test_complete_graphs():
    assert make_complete(1).n == 1 and make_complete(1).edge_count == 0
    k3 = make_complete(3)
    assert k3.edge_count == 3 and k3.degrees() == [2, 2, 2]
    assert make_complete(5).edge_count == 10
    with pytest.raises(ValueError):
        make_complete(0)


def test_disjoint_union():
    k3 = make_complete(3)
    u = disjoint_union(k3, k3)
    assert (u.n, u.edge_count, len(u.components())) == (6, 6, 2)
    assert disjoint_union(k3, make_empty(0)) == k3
    u = disjoint_union(make_complete(2), make_empty(1))
    assert (u.n, u.edge_count) == (3, 1)


def test_join():
    assert join(make_complete(1), make_complete(2)) == make_complete(3)
    star = join(make_complete(1), make_empty(6))
    assert star.edge_count == 6 and star.degree(0) == 6
    g = join(make_complete(1), copies(make_complete(2), 2))
    assert (g.n, g.edge_count, g.degree(0)) == (5, 6, 4)


def test_extremal_graph_shape():
    g = extremal_graph(7, 3, 2)
    assert g.edge_count == 12 and g.degree(0) == 6
    star = extremal_graph(10, 3, 0)
    assert star.edge_count == 9 and star.degrees()[1:] == [1] * 9
    g = extremal_graph(100, 2, 33)
    assert g.edge_count == 99 + 33
    with pytest.raises(ValueError, match="exceeds"):
        extremal_graph(7, 3, 3)
    with pytest.raises(ValueError):
        extremal_graph(7, 1, 2)


def test_invalid_adjacency_rejected():
    with pytest.raises(ValueError, match="asymmetric"):
        Graph(2, (0b10, 0))
    with pytest.raises(ValueError, match="loop"):
        Graph(1, (1,))
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(1, 1)])


def test_small_families():
    assert make_path(4).edge_count == 3
    assert make_cycle(5).degrees() == [2] * 5
    assert complete_bipartite(2, 3).edge_count == 6
    c = circulant(10, [1, 3])
    assert set(c.degrees()) == {4}


def test_remove_and_induce():
    g = make_cycle(5).remove_vertex(2)
    assert nx.is_isomorphic(_nx(g), nx.path_graph(4))
    assert make_complete(5).induced([0, 2, 4]) == make_complete(3)


@given(graphs())
def test_graph6_roundtrip(g):
    assert from_graph6(to_graph6(g)) == g


def test_graph6_known_strings():
    # reference encodings produced by networkx
    for g in (make_complete(5), make_cycle(7), extremal_graph(13, 3, 4), make_empty(70)):
        ref = nx.to_graph6_bytes(_nx(g), nodes=range(g.n), header=False).decode().strip()
        assert to_graph6(g) == ref
    assert from_graph6(">>graph6<<Bw") == make_complete(3)
    with pytest.raises(ValueError):
        from_graph6("B")


def test_graph6_file_roundtrip(tmp_path):
    gs = [make_complete(4), make_path(6), make_empty(1)]
    p = tmp_path / "x.g6"
    write_graph6_file(p, gs)
    assert read_graph6_file(p) == gs


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=8), st.randoms(use_true_random=False))
def test_canonical_form_invariant_under_relabelling(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = g.relabel(perm)
    assert canonical_form(g)[0] == canonical_form(h)[0]
    assert canonical_graph(g) == canonical_graph(h)


def _nx(g):
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 7).flatmap(lambda n: st.tuples(graphs(n, min_n=n), graphs(n, min_n=n))))
def test_canonical_form_separates_classes(pair):
    # codes are a complete invariant at a fixed order
    g, h = pair
    same = nx.is_isomorphic(_nx(g), _nx(h))
    assert (canonical_form(g)[0] == canonical_form(h)[0]) == same


@pytest.mark.parametrize("n,classes", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156)])
def test_canonical_class_counts(n, classes):
    codes = set()
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        g = Graph.from_edges(n, [e for i, e in enumerate(pairs) if mask >> i & 1])
        codes.add(canonical_form(g)[0])
    assert len(codes) == classes


def test_canonical_perm_maps_to_canonical_graph():
    rnd = random.Random(3)
    for _ in range(50):
        n = rnd.randint(1, 9)
        g = Graph.from_edges(n, [e for e in itertools.combinations(range(n), 2) if rnd.random() < 0.4])
        code, perm = canonical_form(g)
        assert canonical_form(g.relabel(list(perm)))[0] == code

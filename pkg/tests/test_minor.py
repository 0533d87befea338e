import itertools
import random

import pytest

import _oracles as orc
from k2tspread.graph import (
    Graph,
    complete_bipartite,
    copies,
    disjoint_union,
    extremal_graph,
    join,
    make_complete,
    make_cycle,
    make_empty,
    make_path,
)
from k2tspread.minor import (
    BudgetExhausted,
    MinorModel,
    biconnected_blocks,
    edge_bound_holds,
    find_minor,
    has_minor,
    is_k2t_minor_free,
)


def _fan(k):
    return join(make_complete(1), make_path(k))


def test_examples():
    m = find_minor(make_complete(4), make_complete(3))
    assert m is not None and m.is_valid(make_complete(4), make_complete(3))
    c5, k22 = make_cycle(5), complete_bipartite(2, 2)
    m = find_minor(c5, k22)
    assert m is not None and m.is_valid(c5, k22)
    assert not is_k2t_minor_free(make_complete(4), 2)
    assert is_k2t_minor_free(extremal_graph(20, 3, 6), 3)
    for n in (2, 5, 12):
        for t in (2, 3, 5):
            assert is_k2t_minor_free(extremal_graph(n, 2, 0), t)


@pytest.mark.parametrize("q,t", [(1, 2), (3, 2), (2, 3), (4, 3), (2, 4), (3, 5)])
def test_family_is_minor_free(q, t):
    assert is_k2t_minor_free(join(make_complete(1), copies(make_complete(t), q)), t)


def test_family_contains_next_bipartite_minor():
    # adding one edge between two cliques creates K_{2,t}
    g = extremal_graph(7, 3, 2).add_edge(1, 4)
    assert not is_k2t_minor_free(g, 3)
    assert not is_k2t_minor_free(extremal_graph(9, 3, 2), 2)


def test_edge_bound_examples():
    assert edge_bound_holds(make_complete(1), 5)
    assert edge_bound_holds(extremal_graph(13, 3, 4), 3)
    assert not edge_bound_holds(make_complete(5), 2)


def test_trivial_patterns():
    assert find_minor(make_empty(3), make_empty(2)) is not None
    assert find_minor(make_empty(2), make_empty(3)) is None
    assert find_minor(make_path(3), make_complete(3)) is None
    with pytest.raises(ValueError):
        find_minor(make_complete(3), make_empty(0))


def test_disconnected_pattern():
    two_edges = copies(make_complete(2), 2)
    assert has_minor(make_path(4), two_edges)
    assert not has_minor(make_path(3), two_edges)
    assert has_minor(disjoint_union(make_cycle(4), make_complete(3)), disjoint_union(make_complete(3), make_complete(3)))


def test_outerplanar_fans_have_no_k23():
    for k in range(2, 11):
        assert is_k2t_minor_free(_fan(k), 3)
    assert not is_k2t_minor_free(join(make_complete(1), make_cycle(5)), 3)


def test_budget():
    with pytest.raises(BudgetExhausted) as info:
        find_minor(_fan(12), complete_bipartite(2, 3), budget=50)
    assert info.value.nodes > 50


def test_model_validation_rejects_bad_models():
    g, h = make_cycle(4), make_complete(3)
    bad = [
        MinorModel((frozenset({0}), frozenset({1}))),
        MinorModel((frozenset({0}), frozenset({0, 1}), frozenset({2}))),
        MinorModel((frozenset({0, 2}), frozenset({1}), frozenset({3}))),
        MinorModel((frozenset({0}), frozenset({2}), frozenset({1}))),
    ]
    assert not any(m.is_valid(g, h) for m in bad)
    assert MinorModel((frozenset({0, 1}), frozenset({2}), frozenset({3}))).is_valid(g, h)


def test_biconnected_blocks():
    bowtie = Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    assert sorted(biconnected_blocks(bowtie)) == sorted([0b00111, 0b11100])
    assert sorted(biconnected_blocks(make_path(3))) == [0b011, 0b110]


PATTERNS = {
    "K3": make_complete(3),
    "K4": make_complete(4),
    "P3": make_path(3),
    "C4": make_cycle(4),
    "K13": complete_bipartite(1, 3),
    "K23": complete_bipartite(2, 3),
    "2K2": copies(make_complete(2), 2),
    "K3+K1": disjoint_union(make_complete(3), make_empty(1)),
}


@pytest.mark.parametrize("name", sorted(PATTERNS))
def test_against_closure_oracle(name):
    h = PATTERNS[name]
    h_mask = orc.mask_of(h.n, h.edges())
    for n in range(1, 6):
        for mask in range(1 << len(orc.pairs(n))):
            g = Graph.from_edges(n, orc.edges_of(n, mask))
            model = find_minor(g, h)
            assert (model is not None) == orc.has_minor_oracle(n, mask, h.n, h_mask), (n, mask)
            if model is not None:
                assert model.is_valid(g, h)


def test_minor_monotone_under_edge_addition():
    rnd = random.Random(9)
    h = complete_bipartite(2, 3)
    for _ in range(150):
        n = rnd.randint(5, 9)
        g = Graph.from_edges(n, [e for e in itertools.combinations(range(n), 2) if rnd.random() < 0.35])
        missing = [e for e in itertools.combinations(range(n), 2) if not g.has_edge(*e)]
        if not missing:
            continue
        g2 = g.add_edge(*rnd.choice(missing))
        if has_minor(g, h):
            assert has_minor(g2, h)
        if not has_minor(g2, h):
            assert not has_minor(g, h)
            assert edge_bound_holds(g2, 3)

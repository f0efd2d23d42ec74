import random

import pytest

from orbitharmonics.errors import InconsistencyError
from orbitharmonics.generator import random_valid_hypergraph
from orbitharmonics.hypergraph import (
    full_closed_vertices,
    harmonic_space,
    is_harmonic,
    make_hypergraph,
    support_function,
)
from test_hypergraph import fig_rank2_inner, fig_rank2_outer


def test_outer_figure_support_values():
    s = support_function(fig_rank2_outer())
    assert s.generators == ("v4",)
    assert s.as_dict() == {
        "v1": {"v4": 1}, "v2": {"v4": -1}, "v3": {"v4": -1}, "v4": {"v4": 1}}


def test_inner_figure_support_values():
    s = support_function(fig_rank2_inner())
    assert s.generators == ("v4",)
    assert s.value("v4") == {"v4": 1}
    assert s.value("v5") == {}
    assert s.value("v6") == {}
    assert s.value("v1") == {"v4": 1}


def test_empty_full_set_gives_zero_function():
    g = make_hypergraph(
        [("c", 0), ("o", 1)],
        [("s1", {"c", "o"}, "N"), ("s2", {"c"}, "G"), ("s2", {"o"}, "G")])
    s = support_function(g)
    assert s.generators == ()
    assert all(v == {} for v in s.as_dict().values())


def test_support_identity_on_full_closed(catalog):
    for entry in catalog:
        g = entry.hypergraph_closed
        s = support_function(g)
        assert set(s.generators) == set(full_closed_vertices(g))
        for x in s.generators:
            assert s.value(x) == {x: 1}


def test_support_annihilates_every_edge(catalog):
    for entry in catalog:
        graphs = [entry.hypergraph_closed]
        if entry.hypergraph_rational is not None:
            graphs.append(entry.hypergraph_rational)
        for g in graphs:
            s = support_function(g)
            for e in g.edges:
                total = {}
                for v in e.members:
                    for x, c in s.value(v).items():
                        total[x] = total.get(x, 0) + c
                assert all(c == 0 for c in total.values()), (entry.name, e.key())


def test_support_coordinates_are_harmonic(catalog):
    for entry in catalog:
        g = entry.hypergraph_closed
        s = support_function(g)
        for x in s.generators:
            assert is_harmonic(g, s.coordinate(x))


def test_inconsistent_input_detected():
    # a full closed vertex joined to two tops, one of which is pinned to zero
    g = make_hypergraph(
        [("v", 0), ("u", 1), ("w", 1)],
        [("s1", {"v", "u"}, "N"), ("s1", {"w"}, "G"),
         ("s2", {"v", "w"}, "N"), ("s2", {"u"}, "G")])
    with pytest.raises(InconsistencyError, match="edge"):
        support_function(g)


def test_support_on_random_graphs():
    rng = random.Random(4021)
    for _ in range(30):
        g = random_valid_hypergraph(rng)
        s = support_function(g)
        assert len(s.generators) == harmonic_space(g).dimension
        for x in s.generators:
            assert is_harmonic(g, s.coordinate(x))

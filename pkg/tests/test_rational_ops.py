import pytest

from orbitharmonics.errors import ValidationError
from orbitharmonics.generator import atom_normalizer_pair, atom_torus_triple
from orbitharmonics.hypergraph import (
    finite_field_pullback,
    harmonic_space,
    is_harmonic,
    is_isomorphic,
    make_hypergraph,
    multiplicity,
    rational_form_delete,
    rational_form_double,
)
from test_hypergraph import fig_rank2_outer


def test_double_torus_triple_gives_dimension_three():
    t3 = atom_torus_triple()
    doubled = rational_form_double(t3, "o")
    assert sorted(doubled.vertices) == ["c1", "c2", "o.1", "o.2"]
    assert [e.sorted_members() for e in doubled.edges] == [("c1", "c2", "o.1", "o.2")]
    assert doubled.mode == "rational"
    assert harmonic_space(doubled).dimension == 3


def test_double_with_no_propagation_touches_only_target():
    npair = atom_normalizer_pair()
    doubled = rational_form_double(npair, "o")
    assert sorted(doubled.vertices) == ["c", "o.1", "o.2"]
    assert [e.sorted_members() for e in doubled.edges] == [("c", "o.1", "o.2")]


def test_double_propagates_upward_and_through_u_edges():
    # c < m < o with a U-edge between m and o: doubling m doubles o too
    g = make_hypergraph(
        [("c", 0), ("m", 1), ("o", 2)],
        [("s1", {"c", "m"}, "N"), ("s1", {"o"}, "G"),
         ("s2", {"m", "o"}, "U"), ("s2", {"c"}, "G")])
    doubled = rational_form_double(g, "m")
    assert sorted(doubled.vertices) == ["c", "m.1", "m.2", "o.1", "o.2"]
    keys = {(e.label, e.sorted_members()) for e in doubled.edges}
    assert ("s1", ("c", "m.1", "m.2")) in keys
    assert ("s2", ("m.1", "o.1")) in keys and ("s2", ("m.2", "o.2")) in keys
    assert ("s1", ("o.1",)) in keys and ("s1", ("o.2",)) in keys


def test_double_rejects_non_maximal_vertex():
    t3 = atom_torus_triple()
    with pytest.raises(ValidationError):
        rational_form_double(t3, "c1")


def test_delete_torus_triple_keeps_dense_vertex():
    t3 = atom_torus_triple()
    edge = t3.edges[0]
    survived = rational_form_delete(t3, edge)
    assert survived.vertices == ("o",)
    assert [e.sorted_members() for e in survived.edges] == [("o",)]
    assert survived.mode == "rational"


def test_delete_propagates_through_u_and_matching_rank_n():
    g = fig_rank2_outer()
    edge = g.edge_at("s2", "v4")  # the N-edge {v2, v4}
    survived = rational_form_delete(g, edge)
    # v4 deleted; v3 is N-joined to v4 at a different rank, so it stays
    assert survived.vertices == ("v1", "v2", "v3")
    got = {(e.label, e.sorted_members()) for e in survived.edges}
    assert got == {("s1", ("v1", "v2")), ("s1", ("v3",)),
                   ("s2", ("v1", "v3")), ("s2", ("v2",))}


def test_delete_same_rank_n_propagation():
    # the N-neighbor of a deleted vertex dies only at equal rank
    same = make_hypergraph(
        [("x", 0), ("y", 0), ("z", 1)],
        [("s1", {"x", "z"}, "N"), ("s1", {"y"}, "G"),
         ("s2", {"x", "y"}, "N"), ("s2", {"z"}, "G")],
        mode="rational")
    survived = rational_form_delete(same, same.edge_at("s1", "x"))
    assert survived.vertices == ("z",)

    higher = make_hypergraph(
        [("x", 0), ("y", 1), ("z", 1)],
        [("s1", {"x", "z"}, "N"), ("s1", {"y"}, "G"),
         ("s2", {"x", "y"}, "N"), ("s2", {"z"}, "G")],
        mode="rational")
    survived = rational_form_delete(higher, higher.edge_at("s1", "x"))
    assert survived.vertices == ("y", "z")


def test_delete_rejects_u_edge():
    g = fig_rank2_outer()
    with pytest.raises(ValidationError):
        rational_form_delete(g, g.edge_at("s1", "v1"))


def test_multiplicity_counts_dense_vertices_above():
    doubled = rational_form_double(atom_torus_triple(), "o")
    m = multiplicity(doubled)
    assert m == {"c1": 2, "c2": 2, "o.1": 1, "o.2": 1}


def test_pullback_identity_projection():
    g = fig_rank2_outer()
    proj = {v: v for v in g.vertices}
    phi = harmonic_space(g).basis_functions()[0]
    pulled = finite_field_pullback(g, g, proj, phi)
    assert pulled == {v: phi[v] for v in g.vertices}  # every m(x) is 1 here


def test_pullback_zero_function():
    doubled = rational_form_double(atom_torus_triple(), "o")
    proj = {"c1": "c1", "c2": "c2", "o.1": "o", "o.2": "o"}
    pulled = finite_field_pullback(doubled, atom_torus_triple(), proj,
                                   {"c1": 0, "c2": 0, "o": 0})
    assert all(v == 0 for v in pulled.values())


def test_pullback_is_harmonic_with_weights():
    t3 = atom_torus_triple()
    doubled = rational_form_double(t3, "o")
    proj = {"c1": "c1", "c2": "c2", "o.1": "o", "o.2": "o"}
    for phi in harmonic_space(t3).basis_functions():
        pulled = finite_field_pullback(doubled, t3, proj, phi)
        assert pulled["c1"] == 2 * phi["c1"]
        assert pulled["o.1"] == phi["o"]
        assert is_harmonic(doubled, pulled)


def test_pullback_rejects_bad_projection():
    t3 = atom_torus_triple()
    doubled = rational_form_double(t3, "o")
    with pytest.raises(ValidationError):
        finite_field_pullback(doubled, t3, {"c1": "c1"}, {})
    g = fig_rank2_outer()
    crossed = {"v1": "v1", "v2": "v3", "v3": "v2", "v4": "v4"}
    with pytest.raises(ValidationError):
        finite_field_pullback(g, g, crossed, {})


def test_doubling_matches_stored_rational_graphs(catalog):
    sl2 = next(e for e in catalog if e.name == "SL2/Gm")
    regenerated = rational_form_double(sl2.hypergraph_closed, "o")
    assert is_isomorphic(regenerated, sl2.hypergraph_rational)

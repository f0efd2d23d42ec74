import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import oracle_kernel_dim
from orbitharmonics.errors import ModeError, ValidationError
from orbitharmonics.generator import (
    atom_four_cycle,
    atom_normalizer_pair,
    atom_point,
    atom_torus_triple,
    random_valid_hypergraph,
)
from orbitharmonics.hypergraph import (
    from_json_dict,
    full_closed_vertices,
    harmonic_space,
    is_harmonic,
    is_isomorphic,
    make_hypergraph,
    product,
    quotient_by_automorphisms,
    relabel,
    to_json,
    to_json_dict,
    validate,
    verify_dimension_theorem,
)


def fig_rank2_outer():
    return make_hypergraph(
        [("v1", 2), ("v2", 1), ("v3", 1), ("v4", 0)],
        [("s1", {"v1", "v2"}, "U"), ("s1", {"v3", "v4"}, "N"),
         ("s2", {"v1", "v3"}, "U"), ("s2", {"v2", "v4"}, "N")])


def fig_rank2_inner():
    return make_hypergraph(
        [("v1", 2), ("v2", 1), ("v3", 1), ("v4", 0), ("v5", 0), ("v6", 0)],
        [("s1", {"v1", "v2"}, "U"), ("s1", {"v3", "v4", "v6"}, "T"), ("s1", {"v5"}, "G"),
         ("s2", {"v1", "v3"}, "U"), ("s2", {"v2", "v4", "v5"}, "T"), ("s2", {"v6"}, "G")])


def test_validate_accepts_figures(catalog):
    for entry in catalog:
        validate(entry.hypergraph_closed)


def test_partition_violation_named():
    with pytest.raises(ValidationError, match="overlap|not covered"):
        make_hypergraph([("a", 0), ("b", 1)],
                        [("s", {"a", "b"}, "U"), ("s", {"b"}, "G")])


def test_size_type_mismatch_named():
    with pytest.raises(ValidationError, match="size"):
        make_hypergraph([("a", 0), ("b", 0), ("c", 1)],
                        [("s", {"a", "b", "c"}, "U")])


def test_dense_vertex_uniqueness_enforced():
    with pytest.raises(ValidationError, match="maximal rank"):
        make_hypergraph([("a", 1), ("b", 1)], [("s", {"a", "b"}, "U")])


def test_rank_span_enforced():
    with pytest.raises(ValidationError, match="ranks"):
        make_hypergraph([("a", 0), ("b", 2)], [("s", {"a", "b"}, "U")])


def test_single_vertex_loops_valid():
    g = make_hypergraph([("v", 0)], [("s1", {"v"}, "G"), ("s2", {"v"}, "G")])
    assert harmonic_space(g).dimension == 0
    assert full_closed_vertices(g) == ()


def test_harmonic_dims_match_oracle_on_figures():
    outer, inner = fig_rank2_outer(), fig_rank2_inner()
    assert harmonic_space(outer).dimension == oracle_kernel_dim(outer) == 1
    assert harmonic_space(inner).dimension == oracle_kernel_dim(inner) == 1
    assert harmonic_space(inner).basis == ((1, -1, -1, 1, 0, 0),)


def test_no_edges_means_full_dimension():
    g = make_hypergraph([("a", 0), ("b", 0), ("c", 0)], [], labels=[])
    assert harmonic_space(g).dimension == 3


def test_full_closed_vertices_on_figures():
    assert full_closed_vertices(fig_rank2_outer()) == ("v4",)
    assert full_closed_vertices(fig_rank2_inner()) == ("v4",)


def test_full_closed_vertices_catalog(catalog):
    for entry in catalog:
        got = len(full_closed_vertices(entry.hypergraph_closed))
        assert got == entry.expected["full_closed_count"]


def test_dimension_theorem_rejects_rational_mode():
    g = make_hypergraph([("a", 0)], [("s", {"a"}, "G")], mode="rational")
    with pytest.raises(ModeError):
        verify_dimension_theorem(g)


def test_quotient_trivial_group_is_identity():
    g = fig_rank2_outer()
    q = quotient_by_automorphisms(g, [{v: v for v in g.vertices}])
    assert to_json_dict(q) == to_json_dict(g)


def test_quotient_two_vertex_swap():
    g = make_hypergraph([("a", 0), ("b", 0)],
                        [("s", {"a"}, "G"), ("s", {"b"}, "G")])
    q = quotient_by_automorphisms(g, [{"a": "b", "b": "a"}])
    assert q.vertices == ("a",)


def test_quotient_rejects_non_automorphism():
    g = fig_rank2_outer()
    with pytest.raises(ValidationError):
        quotient_by_automorphisms(g, [{"v1": "v1", "v2": "v3", "v3": "v2", "v4": "v4"}])


def test_quotient_retypes_collapsed_triple():
    t3 = atom_torus_triple()
    q = quotient_by_automorphisms(t3, [{"c1": "c2", "c2": "c1", "o": "o"}])
    assert [(e.kind, len(e.members)) for e in q.edges] == [("N", 2)]


def test_product_unit():
    g = fig_rank2_outer()
    unit = make_hypergraph([("u", 0)], [], labels=[])
    assert is_isomorphic(product(g, unit), g)


def test_product_label_collision_rejected():
    with pytest.raises(ValidationError):
        product(atom_point(), atom_point())


def test_product_square_of_outer_figure():
    g = fig_rank2_outer()
    prod = product(relabel(g, "L."), relabel(g, "R."))
    assert len(prod.vertices) == 16
    assert harmonic_space(prod).dimension == 1
    assert len(full_closed_vertices(prod)) == 1


def test_product_dimension_multiplicative(catalog):
    small = [e.hypergraph_closed for e in catalog
             if len(e.hypergraph_closed.vertices) <= 11]
    for g1 in small[:4]:
        for g2 in small[:4]:
            prod = product(relabel(g1, "L."), relabel(g2, "R."))
            assert harmonic_space(prod).dimension == (
                harmonic_space(g1).dimension * harmonic_space(g2).dimension)
    # one pair involving the large rank-4 entry
    big = next(e.hypergraph_closed for e in catalog
               if len(e.hypergraph_closed.vertices) == 55)
    point = next(e.hypergraph_closed for e in catalog
                 if len(e.hypergraph_closed.vertices) == 1)
    prod = product(relabel(big, "L."), relabel(point, "R."))
    assert harmonic_space(prod).dimension == 0  # the point pins everything


def test_json_roundtrip():
    g = fig_rank2_inner()
    assert to_json_dict(from_json_dict(to_json_dict(g))) == to_json_dict(g)
    assert "vertices" in to_json(g)


def test_isomorphism_detects_relabeling():
    g = fig_rank2_outer()
    renamed = make_hypergraph(
        [("x1", 2), ("x2", 1), ("x3", 1), ("x4", 0)],
        [("s1", {"x1", "x2"}, "U"), ("s1", {"x3", "x4"}, "N"),
         ("s2", {"x1", "x3"}, "U"), ("s2", {"x2", "x4"}, "N")])
    assert is_isomorphic(g, renamed)
    assert not is_isomorphic(g, fig_rank2_inner())
    # the four-cycle atom is this very figure under different vertex names
    assert is_isomorphic(g, atom_four_cycle(("s1", "s2")))


@settings(deadline=None, max_examples=40)
@given(st.integers(min_value=0, max_value=10_000))
def test_random_graphs_satisfy_dimension_theorem(seed):
    g = random_valid_hypergraph(random.Random(seed))
    validate(g)
    assert verify_dimension_theorem(g)
    assert harmonic_space(g).dimension == oracle_kernel_dim(g)


def test_harmonic_basis_members_annihilate_edges(catalog):
    for entry in catalog:
        g = entry.hypergraph_closed
        for f in harmonic_space(g).basis_functions():
            assert is_harmonic(g, f)


def test_dim_at_least_count_everywhere(catalog):
    for entry in catalog:
        graphs = [entry.hypergraph_closed]
        if entry.hypergraph_rational is not None:
            graphs.append(entry.hypergraph_rational)
        for g in graphs:
            assert harmonic_space(g).dimension >= len(full_closed_vertices(g))


def test_normalizer_pair_quotient_matches_catalog(catalog):
    t_entry = next(e for e in catalog if e.name == "PGL2/T")
    n_entry = next(e for e in catalog if e.name == "PGL2/N")
    q = quotient_by_automorphisms(t_entry.hypergraph_closed,
                                  [{"c1": "c2", "c2": "c1", "o": "o"}])
    assert is_isomorphic(q, n_entry.hypergraph_closed)
    assert atom_normalizer_pair("s1") is not None

import pytest

from orbitharmonics.affine import (
    AffineAut,
    affine_support_function,
    affine_to_json_dict,
    check_twisted_equivariance,
    close_under_composition,
    gamma0,
    gamma1,
    make_affine,
    shape_box,
    shape_line,
    shape_rectangle,
    twisted_harmonic_exists,
    twisted_harmonic_witness,
    zero_length_full_vertices,
)
from orbitharmonics.errors import ValidationError
from orbitharmonics.hypergraph import harmonic_space, is_harmonic, to_json_dict
from orbitharmonics.rootsystem import (
    OmegaCharacter,
    chi0_character,
    fundamental_group,
    root_system,
    trivial_character,
)

A1_AFF = fundamental_group(root_system((("A", 1),)))
SWAP = (1, 0)
NODES = ("0:0", "0:1")


def bowtie():
    return make_affine(
        [("x", 0), ("y", 0), ("z1", 1), ("z2", 1), ("w", 2)],
        [("0:0", {"x", "y", "z1"}, "T"), ("0:0", {"z2", "w"}, "U"),
         ("0:1", {"x", "y", "z2"}, "T"), ("0:1", {"z1", "w"}, "U")],
        NODES)


def bowtie_aut():
    return AffineAut(NODES, SWAP, tuple(sorted(
        {"x": "x", "y": "y", "z1": "z2", "z2": "z1", "w": "w"}.items())))


def test_shapes_validate_and_serialize():
    for g in (shape_line(5), shape_line(6, full_base=True),
              shape_rectangle(4), shape_box(3)):
        data = affine_to_json_dict(g)
        assert set(data) >= {"vertices", "edges", "omega_nodes"}


def test_rectangle_support_alternates():
    g = shape_rectangle(5).as_hypergraph()
    s = affine_support_function(g)
    assert s.generators == ("a0",)
    assert s.value("a3") == {"a0": -1}
    assert s.value("b0") == {"a0": -1}
    assert s.value("b3") == {"a0": 1}


def test_closed_line_support_alternates_with_parity():
    g = shape_line(8, full_base=True).as_hypergraph()
    s = affine_support_function(g)
    assert s.generators == ("v0",)
    for v in g.vertices:
        expected = {"v0": 1} if g.rank_of[v] % 2 == 0 else {"v0": -1}
        assert s.value(v) == expected


def test_open_line_has_no_base_and_zero_support():
    g = shape_line(5).as_hypergraph()
    assert zero_length_full_vertices(g) == ()
    s = affine_support_function(g)
    assert all(val == {} for val in s.as_dict().values())


def test_box_support_consistent():
    g = shape_box(4).as_hypergraph()
    s = affine_support_function(g)
    assert set(s.generators) == {"af0", "bf0"}
    for e in g.edges:
        total = {}
        for v in e.members:
            for x, c in s.value(v).items():
                total[x] = total.get(x, 0) + c
        assert all(c == 0 for c in total.values())


def test_affine_shape_rule_enforced():
    with pytest.raises(ValidationError, match="between its extremes"):
        make_affine([("a", 0), ("b", 1), ("c", 2)],
                    [("0:0", {"a", "b", "c"}, "T"),
                     ("0:1", {"a"}, "G"), ("0:1", {"b"}, "G"), ("0:1", {"c"}, "G")],
                    NODES)


def test_gamma0_trivial_action_is_identity():
    g = bowtie()
    q = gamma0(g)
    assert to_json_dict(q) == to_json_dict(g.as_hypergraph())


def test_gamma0_free_action_halves_line():
    # two disjoint closed lines swapped by the action
    base = shape_line(4, full_base=True)
    verts = [(f"{v}.1", l) for v, l in base.lengths] + \
            [(f"{v}.2", l) for v, l in base.lengths]
    edges = []
    for e in base.edges:
        edges.append((e.label, {m + ".1" for m in e.members}, e.kind))
        edges.append((e.label, {m + ".2" for m in e.members}, e.kind))
    vmap = {}
    for v, _ in base.lengths:
        vmap[f"{v}.1"] = f"{v}.2"
        vmap[f"{v}.2"] = f"{v}.1"
    aut = AffineAut(NODES, (0, 1), tuple(sorted(vmap.items())))
    g = make_affine(verts, edges, NODES, omega_action=[aut])
    q = gamma0(g)
    assert len(q.vertices) == 4
    assert harmonic_space(q).dimension == harmonic_space(
        base.as_hypergraph()).dimension


def test_gamma1_requires_coloring():
    with pytest.raises(ValidationError):
        gamma1(bowtie())


def test_gamma1_whole_graph_when_unit_colored():
    g = bowtie()
    colored = make_affine(g.lengths,
                          [(e.label, e.members, e.kind) for e in g.edges],
                          NODES, coloring=[(v, (0, 1)) for v in g.vertices])
    q = gamma1(colored)
    assert set(q.vertices) == set(g.vertices)


def test_catalog_affine_fragments_roundtrip(catalog):
    for entry in catalog:
        if entry.affine is None:
            continue
        assert to_json_dict(gamma0(entry.affine.graph)) == to_json_dict(
            entry.affine.gamma0_graph)
        assert to_json_dict(gamma1(entry.affine.graph)) == to_json_dict(
            entry.affine.gamma1_graph)


def test_twisted_existence_conditions():
    g1 = bowtie().as_hypergraph()
    aut = bowtie_aut()
    stab = {"x": [SWAP, (0, 1)], "y": [SWAP, (0, 1)]}
    chi0 = chi0_character(A1_AFF)
    trivial = trivial_character(A1_AFF)
    assert twisted_harmonic_exists(g1, [aut], chi0, stab)
    assert not twisted_harmonic_exists(g1, [aut], trivial, stab)
    # without stabilizer pinning the character condition is computed from the action
    assert twisted_harmonic_exists(g1, [aut], chi0)


def test_twisted_false_when_no_base():
    g1 = shape_line(5).as_hypergraph()
    assert not twisted_harmonic_exists(g1, [], chi0_character(A1_AFF))
    assert twisted_harmonic_witness(g1, [], chi0_character(A1_AFF)) is None


def test_twisted_true_with_trivial_conditions():
    g1 = shape_line(6, full_base=True).as_hypergraph()
    chi = trivial_character(A1_AFF)
    assert twisted_harmonic_exists(g1, [], chi)
    w = twisted_harmonic_witness(g1, [], chi)
    assert is_harmonic(g1, w)


def test_witness_harmonic_and_equivariant():
    g1 = bowtie().as_hypergraph()
    aut = bowtie_aut()
    stab = {"x": [SWAP], "y": [SWAP]}
    chi0 = chi0_character(A1_AFF)
    w = twisted_harmonic_witness(g1, [aut], chi0, stab)
    assert is_harmonic(g1, w)
    assert check_twisted_equivariance(g1, close_under_composition([aut]), chi0, w)
    # the orbit construction pins the smallest base vertex to 1, the rest to 0
    assert w["x"] == 1
    assert w["y"] == 0


def test_order_three_character_on_rank_two_diagram():
    aff = fundamental_group(root_system((("A", 2),)))
    nodes = tuple(aff.nodes)
    line = shape_line(6, full_base=True, labels=(nodes[0], nodes[1]),
                      omega_nodes=nodes)
    g1 = line.as_hypergraph()
    rot = next(g for g in aff.omega if g != aff.identity)
    nontrivial = OmegaCharacter(3, tuple(
        (g, {aff.identity: 0, rot: 1, aff.compose(rot, rot): 2}[g])
        for g in aff.omega))
    stab = {"v0": [aff.identity]}
    assert twisted_harmonic_exists(g1, [], nontrivial, stab)
    w = twisted_harmonic_witness(g1, [], nontrivial, stab)
    assert is_harmonic(g1, w)


def test_close_under_composition_forms_group():
    closure = close_under_composition([bowtie_aut()])
    assert len(closure) == 2
    elements = {a.element for a in closure}
    assert elements == {(0, 1), (1, 0)}

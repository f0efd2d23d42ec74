"""Regenerate the shipped catalog JSON files.

Every entry is assembled here from first principles (figure data typed in
by hand, derived entries recomputed through the public operations, the
rank-4 entry generated by tools/clans.py), asserted against the
hand-derived expectation table, passed through the loader's
self-verification, and written to src/orbitharmonics/data/.

Run from the repository root:  python tools/build_catalog.py
"""

from __future__ import annotations

import json
import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

import clans  # noqa: E402

from orbitharmonics.affine import (  # noqa: E402
    AffineAut,
    affine_to_json_dict,
    gamma0,
    gamma1,
    make_affine,
)
from orbitharmonics.catalog import SCHEMA, entry_from_json  # noqa: E402
from orbitharmonics.hypergraph import (  # noqa: E402
    from_json_dict,
    full_closed_vertices,
    harmonic_space,
    make_hypergraph,
    product,
    quotient_by_automorphisms,
    rational_form_double,
    relabel,
    to_json_dict,
)

DATA_DIR = os.path.join(os.path.dirname(__file__), os.pardir,
                        "src", "orbitharmonics", "data")


# ---------------------------------------------------------------------------
# helpers
# ---------------------------------------------------------------------------

def graph_json(vertices, edges, mode="algebraically_closed"):
    return to_json_dict(make_hypergraph(vertices, edges, mode=mode))


def affine_graph_json(g):
    return affine_to_json_dict(g)


def aut_json(aut):
    return {"element": list(aut.element), "vertex_map": dict(aut.vertex_map)}


BOWTIE_VERTS = [("x", 0), ("y", 0), ("z1", 1), ("z2", 1), ("w", 2)]


def bowtie_edges(l0, l1):
    return [(l0, {"x", "y", "z1"}, "T"), (l0, {"z2", "w"}, "U"),
            (l1, {"x", "y", "z2"}, "T"), (l1, {"z1", "w"}, "U")]


def two_copy_fragment(nodes, element, l0, l1):
    """Two label-twisted copies of the bowtie with the swap action and coloring."""
    identity = tuple(range(len(nodes)))
    label_swap = {l0: nodes[element[nodes.index(l0)]], l1: nodes[element[nodes.index(l1)]]}
    verts = [(f"{v}.a", l) for v, l in BOWTIE_VERTS] + \
            [(f"{v}.b", l) for v, l in BOWTIE_VERTS]
    edges = []
    for lbl, members, kind in bowtie_edges(l0, l1):
        edges.append((lbl, {f"{m}.a" for m in members}, kind))
        edges.append((label_swap[lbl], {f"{m}.b" for m in members}, kind))
    vmap = {}
    for v, _ in BOWTIE_VERTS:
        vmap[f"{v}.a"] = f"{v}.b"
        vmap[f"{v}.b"] = f"{v}.a"
    swap_aut = AffineAut(tuple(nodes), tuple(element), tuple(sorted(vmap.items())))
    coloring = [(f"{v}.a", identity) for v, _ in BOWTIE_VERTS] + \
               [(f"{v}.b", tuple(element)) for v, _ in BOWTIE_VERTS]
    graph = make_affine(verts, edges, nodes, omega_action=[swap_aut], coloring=coloring,
                        labels=sorted({l0, l1} | set(label_swap.values())))
    # the residual action on the unit-color section
    h_map = {"x.a": "x.a", "y.a": "y.a", "z1.a": "z2.a", "z2.a": "z1.a", "w.a": "w.a"}
    h_aut = AffineAut(tuple(nodes), tuple(element), tuple(sorted(h_map.items())))
    identity_elem = identity
    stabilizers = {"x.a": [list(identity_elem), list(element)],
                   "y.a": [list(identity_elem), list(element)]}
    return {
        "graph": affine_graph_json(graph),
        "h_action": [aut_json(h_aut)],
        "stabilizers": stabilizers,
        "gamma0": to_json_dict(gamma0(graph)),
        "gamma1": to_json_dict(gamma1(graph)),
    }


def plain_fragment(shape_graph, stabilizer_verts, identity_len):
    """Fragment with trivial length-zero action; its own quotient and section."""
    identity = tuple(range(identity_len))
    coloring = [(v, identity) for v in shape_graph.vertices]
    graph = make_affine(shape_graph.lengths,
                        [(e.label, e.members, e.kind) for e in shape_graph.edges],
                        shape_graph.omega_nodes, omega_action=[], coloring=coloring,
                        labels=shape_graph.labels)
    return {
        "graph": affine_graph_json(graph),
        "h_action": [],
        "stabilizers": {v: [list(identity)] for v in stabilizer_verts},
        "gamma0": to_json_dict(gamma0(graph)),
        "gamma1": to_json_dict(gamma1(graph)),
    }


def closed_line(nodes, l0, l1, cols=4):
    """Even cycle with alternating labels: one full length-zero vertex."""
    verts = [(f"v{i}", min(i, cols - i)) for i in range(cols)]
    edges = [((l0 if i % 2 == 0 else l1),
              frozenset({f"v{i}", f"v{(i + 1) % cols}"}), "U") for i in range(cols)]
    return make_affine(verts, edges, nodes, labels=sorted({l0, l1}))


def open_line(nodes, l0, l1, cols=5):
    """Path whose ends carry singleton edges: empty length-zero full layer."""
    verts = [(f"v{i}", i) for i in range(cols)]
    edges = [((l0 if i % 2 == 0 else l1), frozenset({f"v{i}", f"v{i + 1}"}), "U")
             for i in range(cols - 1)]
    edges.append((l1, frozenset({"v0"}), "G"))
    edges.append((l0 if (cols - 1) % 2 == 0 else l1, frozenset({f"v{cols - 1}"}), "G"))
    return make_affine(verts, edges, nodes, labels=sorted({l0, l1}))


# ---------------------------------------------------------------------------
# figure hypergraphs
# ---------------------------------------------------------------------------

FIG_RANK2_OUTER = graph_json(
    [("v1", 2), ("v2", 1), ("v3", 1), ("v4", 0)],
    [("s1", {"v1", "v2"}, "U"), ("s1", {"v3", "v4"}, "N"),
     ("s2", {"v1", "v3"}, "U"), ("s2", {"v2", "v4"}, "N")])

FIG_RANK2_INNER = graph_json(
    [("v1", 2), ("v2", 1), ("v3", 1), ("v4", 0), ("v5", 0), ("v6", 0)],
    [("s1", {"v1", "v2"}, "U"), ("s1", {"v3", "v4", "v6"}, "T"), ("s1", {"v5"}, "G"),
     ("s2", {"v1", "v3"}, "U"), ("s2", {"v2", "v4", "v5"}, "T"), ("s2", {"v6"}, "G")])

FIG_C2 = graph_json(
    [("v01", 3), ("v02", 2), ("v03", 2), ("v04", 2), ("v05", 1), ("v06", 1),
     ("v07", 1), ("v08", 0), ("v09", 0), ("v10", 0), ("v11", 0)],
    [("s1", {"v01", "v04"}, "U"), ("s1", {"v02", "v05"}, "U"), ("s1", {"v03", "v06"}, "U"),
     ("s1", {"v07", "v09", "v10"}, "T"), ("s1", {"v08"}, "G"), ("s1", {"v11"}, "G"),
     ("s2", {"v01", "v02", "v03"}, "T"), ("s2", {"v04", "v07"}, "U"),
     ("s2", {"v05", "v08", "v09"}, "T"), ("s2", {"v06", "v10", "v11"}, "T")])

FIG_G2 = graph_json(
    [("w01", 4), ("w02", 3), ("w03", 3), ("w04", 2), ("w05", 2), ("w06", 1),
     ("w07", 1), ("w10", 0), ("w11", 0), ("w12", 0)],
    [("s1", {"w01", "w03"}, "U"), ("s1", {"w02", "w04"}, "U"), ("s1", {"w05", "w07"}, "U"),
     ("s1", {"w06", "w11", "w12"}, "T"), ("s1", {"w10"}, "G"),
     ("s2", {"w01", "w02"}, "U"), ("s2", {"w03", "w05"}, "U"), ("s2", {"w04", "w06"}, "U"),
     ("s2", {"w07", "w10", "w11"}, "T"), ("s2", {"w12"}, "G")])

TORUS_TRIPLE = graph_json([("c1", 0), ("c2", 0), ("o", 1)],
                          [("s1", {"c1", "c2", "o"}, "T")])

NORMALIZER_PAIR = graph_json([("c", 0), ("o", 1)], [("s1", {"c", "o"}, "N")])

GROUP_PAIR = graph_json([("e", 0), ("s", 1)],
                        [("s1", {"e", "s"}, "U"), ("s2", {"e", "s"}, "U")])

POINT = graph_json([("v", 0)], [("s1", {"v"}, "G")])


def build_entries():
    a1_nodes = ("0:0", "0:1")
    a2_nodes = ("0:0", "0:1", "0:2")
    c2_nodes = ("0:0", "0:1", "0:2")
    a4_nodes = ("0:0", "0:1", "0:2", "0:3", "0:4")
    a1a1_nodes = ("0:0", "0:1", "1:0", "1:1")
    id2, sw2 = (0, 1), (1, 0)
    id3 = (0, 1, 2)
    rot3 = (1, 2, 0)
    flip_c2 = (2, 1, 0)
    id4, diag4 = (0, 1, 2, 3), (1, 0, 3, 2)
    id5, rot5 = (0, 1, 2, 3, 4), (1, 2, 3, 4, 0)

    entries = []

    # -- adjoint rank-1 pair, connected torus fixed points ------------------
    t3 = from_json_dict(TORUS_TRIPLE)
    entries.append({
        "schema": SCHEMA,
        "name": "PGL2/T",
        "source": "rank-1 split torus pair: three orbits in a single triple edge",
        "involution": {"ambient": {"factors": [["A", 1]]}, "sigma": [[-1]], "name": "PGL2/T"},
        "h_factor_description": ["split torus"],
        "hypergraph_closed": TORUS_TRIPLE,
        "hypergraph_rational": TORUS_TRIPLE,
        "projection": {"c1": "c1", "c2": "c2", "o": "o"},
        "omega_h": {"generators": [list(sw2)], "verified": False},
        "affine": two_copy_fragment(a1_nodes, sw2, "0:0", "0:1"),
        "derived": None,
        "expected": {"quasi_split": True, "full_closed_count": 2,
                     "harmonic_dim_closed": 2, "st_chi0_distinguished": True,
                     "harmonic_dim_rational": 2},
    })

    # -- rank-1 pair with disconnected fixed points -------------------------
    npair = from_json_dict(NORMALIZER_PAIR)
    npair_rational = rational_form_double(npair, "o")
    entries.append({
        "schema": SCHEMA,
        "name": "PGL2/N",
        "source": "fold of the split torus pair by its closed swap; "
                  "rational form doubles the dense orbit",
        "involution": {"ambient": {"factors": [["A", 1]]}, "sigma": [[-1]], "name": "PGL2/N"},
        "h_factor_description": ["torus normalizer"],
        "hypergraph_closed": NORMALIZER_PAIR,
        "hypergraph_rational": to_json_dict(npair_rational),
        "projection": {"c": "c", "o.1": "o", "o.2": "o"},
        "omega_h": {"generators": [list(sw2)], "verified": False},
        "affine": two_copy_fragment(a1_nodes, sw2, "0:0", "0:1"),
        "derived": {"op": "double", "of": "PGL2/N", "vertex": "o"},
        "expected": {"quasi_split": True, "full_closed_count": 1,
                     "harmonic_dim_closed": 1, "st_chi0_distinguished": True,
                     "harmonic_dim_rational": 2},
    })

    # -- simply connected rank-1 pair: the inequality witness ----------------
    sl2_rational = rational_form_double(t3, "o")
    entries.append({
        "schema": SCHEMA,
        "name": "SL2/Gm",
        "source": "split torus in the two-fold cover; the rational graph is the "
                  "doubled triple edge and its harmonic dimension exceeds the "
                  "closed full count",
        "involution": {"ambient": {"factors": [["A", 1]]}, "sigma": [[-1]], "name": "SL2/Gm"},
        "h_factor_description": ["split torus"],
        "hypergraph_closed": TORUS_TRIPLE,
        "hypergraph_rational": to_json_dict(sl2_rational),
        "projection": {"c1": "c1", "c2": "c2", "o.1": "o", "o.2": "o"},
        "omega_h": {"generators": [], "verified": False},
        "affine": plain_fragment(_rect(a1_nodes), ["a0"], 2),
        "derived": {"op": "double", "of": "SL2/Gm", "vertex": "o"},
        "expected": {"quasi_split": True, "full_closed_count": 2,
                     "harmonic_dim_closed": 2, "st_chi0_distinguished": True,
                     "harmonic_dim_rational": 3},
    })

    # -- the group case ------------------------------------------------------
    entries.append({
        "schema": SCHEMA,
        "name": "PGL2xPGL2/PGL2",
        "source": "group case: two orbits joined by both labels",
        "involution": {"ambient": {"factors": [["A", 1], ["A", 1]]},
                       "sigma": [[0, -1], [-1, 0]], "name": "PGL2xPGL2/PGL2"},
        "h_factor_description": ["diagonal copy"],
        "hypergraph_closed": GROUP_PAIR,
        "hypergraph_rational": None,
        "projection": None,
        "omega_h": {"generators": [list(diag4)], "verified": False},
        "affine": two_copy_fragment(a1a1_nodes, diag4, "0:0", "0:1"),
        "derived": None,
        "expected": {"quasi_split": True, "full_closed_count": 1,
                     "harmonic_dim_closed": 1, "st_chi0_distinguished": True},
    })

    # -- rank-2 outer case ----------------------------------------------------
    entries.append({
        "schema": SCHEMA,
        "name": "PGL3/PO3",
        "source": "drawn rank-2 hypergraph of the outer involution of the "
                  "adjoint type-A2 group (four orbits, four double edges)",
        "involution": {"ambient": {"factors": [["A", 2]]},
                       "sigma": [[-1, 0], [0, -1]], "name": "PGL3/PO3"},
        "h_factor_description": ["split orthogonal form"],
        "hypergraph_closed": FIG_RANK2_OUTER,
        "hypergraph_rational": None,
        "projection": None,
        "omega_h": {"generators": [], "verified": False},
        "affine": plain_fragment(closed_line(a2_nodes, "0:0", "0:1"), ["v0"], 3),
        "derived": None,
        "expected": {"quasi_split": True, "full_closed_count": 1,
                     "harmonic_dim_closed": 1, "st_chi0_distinguished": True},
    })

    # -- rank-2 inner case (the small odd-A exception) -------------------------
    inner_a2 = {"ambient": {"factors": [["A", 2]]},
                "sigma": [[0, -1], [-1, 0]], "name": "PGL3/PGL2"}
    entries.append({
        "schema": SCHEMA,
        "name": "PGL3/PGL2",
        "source": "drawn rank-2 hypergraph of the inner involution of the "
                  "adjoint type-A2 group (six orbits, two singleton edges); "
                  "matches the signed-matching graph of signature (1,2)",
        "involution": inner_a2,
        "h_factor_description": ["block subgroup of sizes 1 and 2"],
        "hypergraph_closed": FIG_RANK2_INNER,
        "hypergraph_rational": None,
        "projection": None,
        "omega_h": {"generators": [list(rot3)], "verified": False},
        "affine": plain_fragment(open_line(a2_nodes, "0:0", "0:1"), [], 3),
        "derived": None,
        "expected": {"quasi_split": True, "full_closed_count": 1,
                     "harmonic_dim_closed": 1, "st_chi0_distinguished": False},
    })

    # -- same pair under its block-subgroup name -------------------------------
    entries.append({
        "schema": SCHEMA,
        "name": "PGL3/P(GL1xGL2)",
        "source": "the inner rank-2 pair listed under its block-subgroup name; "
                  "same combinatorial data as PGL3/PGL2",
        "involution": dict(inner_a2, name="PGL3/P(GL1xGL2)"),
        "h_factor_description": ["block subgroup of sizes 1 and 2"],
        "hypergraph_closed": FIG_RANK2_INNER,
        "hypergraph_rational": None,
        "projection": None,
        "omega_h": {"generators": [list(rot3)], "verified": False},
        "affine": plain_fragment(open_line(a2_nodes, "0:0", "0:1"), [], 3),
        "derived": None,
        "expected": {"quasi_split": True, "full_closed_count": 1,
                     "harmonic_dim_closed": 1, "st_chi0_distinguished": False},
    })

    # -- rank-2 symplectic case -------------------------------------------------
    entries.append({
        "schema": SCHEMA,
        "name": "PSp4/PGL2",
        "source": "drawn eleven-orbit hypergraph of the inner involution of the "
                  "adjoint type-C2 group",
        "involution": {"ambient": {"factors": [["C", 2]]},
                       "sigma": [[-1, 0], [0, -1]], "name": "PSp4/PGL2"},
        "h_factor_description": ["principal rank-1 subgroup"],
        "hypergraph_closed": FIG_C2,
        "hypergraph_rational": None,
        "projection": None,
        "omega_h": {"generators": [list(flip_c2)], "verified": False},
        "affine": two_copy_fragment(c2_nodes, flip_c2, "0:0", "0:2"),
        "derived": None,
        "expected": {"quasi_split": True, "full_closed_count": 2,
                     "harmonic_dim_closed": 2, "st_chi0_distinguished": True},
    })

    # -- its mirror fold ---------------------------------------------------------
    fig_c2 = from_json_dict(FIG_C2)
    mirror = {"v01": "v01", "v04": "v04", "v07": "v07",
              "v02": "v03", "v03": "v02", "v05": "v06", "v06": "v05",
              "v08": "v11", "v11": "v08", "v09": "v10", "v10": "v09"}
    folded = quotient_by_automorphisms(fig_c2, [mirror])
    entries.append({
        "schema": SCHEMA,
        "name": "PSp4/PGL2-folded",
        "source": "reconstructed fold of the eleven-orbit type-C2 graph along "
                  "its visible mirror symmetry",
        "involution": {"ambient": {"factors": [["C", 2]]},
                       "sigma": [[-1, 0], [0, -1]], "name": "PSp4/PGL2-folded"},
        "h_factor_description": ["principal rank-1 subgroup, disconnected form"],
        "hypergraph_closed": to_json_dict(folded),
        "hypergraph_rational": None,
        "projection": None,
        "omega_h": {"generators": [list(flip_c2)], "verified": False},
        "affine": None,
        "derived": {"op": "quotient", "of": "PSp4/PGL2", "automorphism": mirror},
        "expected": {"quasi_split": True, "full_closed_count": 1,
                     "harmonic_dim_closed": 1, "st_chi0_distinguished": True},
    })

    # -- the exceptional group case ------------------------------------------------
    entries.append({
        "schema": SCHEMA,
        "name": "G2/(PGL2xSL2)",
        "source": "drawn ten-orbit hypergraph of the inner involution of the "
                  "type-G2 group",
        "involution": {"ambient": {"factors": [["G", 2]]},
                       "sigma": [[-1, 0], [0, -1]], "name": "G2/(PGL2xSL2)"},
        "h_factor_description": ["product of two rank-1 groups"],
        "hypergraph_closed": FIG_G2,
        "hypergraph_rational": None,
        "projection": None,
        "omega_h": {"generators": [], "verified": False},
        "affine": plain_fragment(closed_line(a2_nodes, "0:0", "0:1"), ["v0"], 3),
        "derived": None,
        "expected": {"quasi_split": True, "full_closed_count": 1,
                     "harmonic_dim_closed": 1, "st_chi0_distinguished": True},
    })

    # -- the large odd-A exception ---------------------------------------------------
    pgl5_graph = clans.clan_hypergraph_data(2, 3)
    entries.append({
        "schema": SCHEMA,
        "name": "PGL5/P(GL2xGL3)",
        "source": "generated from signed-matching combinatorics of signature "
                  "(2,3); the generator reproduces the drawn rank-2 inner graph "
                  "at signature (1,2) exactly",
        "involution": {"ambient": {"factors": [["A", 4]]},
                       "sigma": [[0, 0, 0, -1], [0, 0, -1, 0],
                                 [0, -1, 0, 0], [-1, 0, 0, 0]],
                       "name": "PGL5/P(GL2xGL3)"},
        "h_factor_description": ["block subgroup of sizes 2 and 3"],
        "hypergraph_closed": pgl5_graph,
        "hypergraph_rational": None,
        "projection": None,
        "omega_h": {"generators": [list(rot5)], "verified": False},
        "affine": plain_fragment(open_line(a4_nodes, "0:0", "0:1"), [], 5),
        "derived": None,
        "expected": {"quasi_split": True, "full_closed_count": 1,
                     "harmonic_dim_closed": 1, "st_chi0_distinguished": False},
    })

    # -- a product entry ---------------------------------------------------------------
    prod = product(relabel(t3, "L."), relabel(npair, "R."))
    entries.append({
        "schema": SCHEMA,
        "name": "PGL2/TxPGL2/N",
        "source": "product of the two rank-1 entries with prefixed labels",
        "involution": {"ambient": {"factors": [["A", 1], ["A", 1]]},
                       "sigma": [[-1, 0], [0, -1]], "name": "PGL2/TxPGL2/N"},
        "h_factor_description": ["split torus", "torus normalizer"],
        "hypergraph_closed": to_json_dict(prod),
        "hypergraph_rational": None,
        "projection": None,
        "omega_h": {"generators": [[1, 0, 2, 3], [0, 1, 3, 2]], "verified": False},
        "affine": None,
        "derived": {"op": "product", "of": ["PGL2/T", "PGL2/N"],
                    "prefixes": ["L.", "R."]},
        "expected": {"quasi_split": True, "full_closed_count": 2,
                     "harmonic_dim_closed": 2, "st_chi0_distinguished": True},
    })

    # -- a pair that is not quasi-split -------------------------------------------------
    entries.append({
        "schema": SCHEMA,
        "name": "PGL2/PGL2",
        "source": "trivial pair: one orbit carrying a singleton edge",
        "involution": {"ambient": {"factors": [["A", 1]]}, "sigma": [[1]],
                       "name": "PGL2/PGL2"},
        "h_factor_description": ["whole group"],
        "hypergraph_closed": POINT,
        "hypergraph_rational": None,
        "projection": None,
        "omega_h": {"generators": [list(sw2)], "verified": False},
        "affine": None,
        "derived": None,
        "expected": {"quasi_split": False, "full_closed_count": 0,
                     "harmonic_dim_closed": 0, "st_chi0_distinguished": False},
    })

    return entries


def _rect(nodes):
    from orbitharmonics.affine import shape_rectangle
    return shape_rectangle(4, labels=(nodes[0], nodes[1]), omega_nodes=nodes)


HAND_TABLE = {
    "PGL2/T": (True, 2, 2, True),
    "PGL2/N": (True, 1, 1, True),
    "SL2/Gm": (True, 2, 2, True),
    "PGL2xPGL2/PGL2": (True, 1, 1, True),
    "PGL3/PO3": (True, 1, 1, True),
    "PGL3/PGL2": (True, 1, 1, False),
    "PGL3/P(GL1xGL2)": (True, 1, 1, False),
    "PSp4/PGL2": (True, 2, 2, True),
    "PSp4/PGL2-folded": (True, 1, 1, True),
    "G2/(PGL2xSL2)": (True, 1, 1, True),
    "PGL5/P(GL2xGL3)": (True, 1, 1, False),
    "PGL2/TxPGL2/N": (True, 2, 2, True),
    "PGL2/PGL2": (False, 0, 0, False),
}


def main():
    entries = build_entries()
    assert [e["name"] for e in entries] == list(HAND_TABLE)
    os.makedirs(DATA_DIR, exist_ok=True)
    for old in os.listdir(DATA_DIR):
        if old.endswith(".json"):
            os.remove(os.path.join(DATA_DIR, old))
    for idx, data in enumerate(entries, start=1):
        entry = entry_from_json(data)  # full self-verification
        qs, count, dim, st = HAND_TABLE[entry.name]
        assert entry.expected["quasi_split"] == qs, entry.name
        assert entry.expected["full_closed_count"] == count, entry.name
        assert entry.expected["harmonic_dim_closed"] == dim, entry.name
        assert entry.expected["st_chi0_distinguished"] == st, entry.name
        g = from_json_dict(data["hypergraph_closed"])
        assert harmonic_space(g).dimension == dim
        assert len(full_closed_vertices(g)) == count
        safe = (data["name"].lower().replace("/", "_").replace("(", "")
                .replace(")", "").replace("x", "x"))
        path = os.path.join(DATA_DIR, f"{idx:02d}_{safe}.json")
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(data, fh, indent=1, sort_keys=True)
            fh.write("\n")
        print(f"wrote {path}")
    print(f"{len(entries)} entries written")


if __name__ == "__main__":
    main()

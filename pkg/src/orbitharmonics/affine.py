"""Affine-side structures: length-graded hypergraphs with a diagram action.

The affine graphs are never derived from building geometry here; they
enter as catalog data or come from the shape constructors below (line,
rectangle, box), which produce the local configurations the rank-two
reduction needs.  Vertices carry the length grading in place of orbit
dimension, and the diagram action permutes labels through the node
permutation of its underlying length-zero element.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InconsistencyError, ValidationError
from .hypergraph import (
    Edge,
    OrbitHypergraph,
    RATIONAL_MODE,
    SupportFunction,
    _by_grading,
    _support_solve,
    is_full,
    make_hypergraph,
)
from .rootsystem import OmegaCharacter, Perm, perm_sign
from .unity import Cyc


@dataclass(frozen=True)
class AffineAut:
    """A label-twisting automorphism attached to a length-zero element.

    ``nodes`` lists the affine diagram nodes; ``element`` permutes them and
    induces the label action, while ``vertex_map`` moves the vertices.
    """

    nodes: tuple[str, ...]
    element: Perm
    vertex_map: tuple[tuple[str, str], ...]

    @property
    def vmap(self) -> dict:
        cached = self.__dict__.get("_vmap_cache")
        if cached is None:
            cached = dict(self.vertex_map)
            self.__dict__["_vmap_cache"] = cached
        return cached

    def label_image(self, label: str) -> str:
        if label not in self.nodes:
            raise ValidationError(f"label {label!r} is not an affine diagram node")
        return self.nodes[self.element[self.nodes.index(label)]]

    def compose(self, other: "AffineAut") -> "AffineAut":
        """self after other."""
        if self.nodes != other.nodes:
            raise ValidationError("cannot compose automorphisms over different diagrams")
        elem = tuple(self.element[other.element[i]] for i in range(len(self.element)))
        vmap = tuple(sorted((v, self.vmap[w]) for v, w in other.vertex_map))
        return AffineAut(self.nodes, elem, vmap)


def identity_aut(nodes, vertices) -> AffineAut:
    return AffineAut(tuple(nodes), tuple(range(len(nodes))),
                     tuple(sorted((v, v) for v in vertices)))


def close_under_composition(auts) -> list[AffineAut]:
    auts = list(auts)
    if not auts:
        return []
    ident = identity_aut(auts[0].nodes, [v for v, _ in auts[0].vertex_map])
    seen = {(a.element, a.vertex_map): a for a in auts + [ident]}
    changed = True
    while changed:
        changed = False
        items = list(seen.values())
        for a in items:
            for b in items:
                c = a.compose(b)
                key = (c.element, c.vertex_map)
                if key not in seen:
                    seen[key] = c
                    changed = True
    return sorted(seen.values(), key=lambda a: (a.element, a.vertex_map))


@dataclass(frozen=True)
class AffineOrbitHypergraph:
    """Length-graded hypergraph with a (possibly trivial) diagram action."""

    vertices: tuple[str, ...]
    lengths: tuple[tuple[str, int], ...]
    labels: tuple[str, ...]
    edges: tuple[Edge, ...]
    omega_nodes: tuple[str, ...]
    omega_action: tuple[AffineAut, ...] = ()
    coloring: tuple[tuple[str, Perm], ...] | None = None

    @property
    def length_of(self) -> dict:
        cached = self.__dict__.get("_len_cache")
        if cached is None:
            cached = dict(self.lengths)
            self.__dict__["_len_cache"] = cached
        return cached

    def as_hypergraph(self) -> OrbitHypergraph:
        return make_hypergraph(self.lengths, [(e.label, e.members, e.kind) for e in self.edges],
                               mode=RATIONAL_MODE, labels=self.labels)

    def identity_element(self) -> Perm:
        return tuple(range(len(self.omega_nodes)))


def make_affine(vertices, edges, omega_nodes, omega_action=(), coloring=None,
                labels=None, strict_shapes=True) -> AffineOrbitHypergraph:
    lengths = tuple(sorted((str(v), int(l)) for v, l in vertices))
    verts = tuple(v for v, _ in lengths)
    edge_objs = tuple(sorted(
        (Edge(str(lbl), frozenset(str(m) for m in members), str(kind))
         for lbl, members, kind in edges),
        key=lambda e: e.key()))
    if labels is None:
        labels = sorted({e.label for e in edge_objs})
    g = AffineOrbitHypergraph(
        verts, lengths, tuple(labels), edge_objs, tuple(omega_nodes),
        tuple(omega_action),
        tuple(sorted((v, tuple(c)) for v, c in coloring)) if coloring is not None else None)
    validate_affine(g, strict_shapes=strict_shapes)
    return g


def validate_affine(g: AffineOrbitHypergraph, strict_shapes: bool = True) -> None:
    g.as_hypergraph()  # partition and basic structure
    if not set(g.labels) <= set(g.omega_nodes):
        raise ValidationError("affine labels must be affine diagram nodes")
    if strict_shapes:
        for e in g.edges:
            vals = sorted(g.length_of[v] for v in e.members)
            lo, hi = vals[0], vals[-1]
            if len({v for v in vals if v not in (lo, hi)}) > 0:
                raise ValidationError(
                    f"edge {e.key()} has length values strictly between its extremes")
            if vals.count(lo) > 2 or (hi != lo and vals.count(hi) > 2):
                raise ValidationError(
                    f"edge {e.key()} has more than two minimal or maximal elements")
    edge_set = {(e.label, e.members): e.kind for e in g.edges}
    for aut in g.omega_action:
        if tuple(aut.nodes) != g.omega_nodes:
            raise ValidationError("automorphism diagram nodes do not match the graph")
        if sorted(aut.vmap) != list(g.vertices) or sorted(aut.vmap.values()) != list(g.vertices):
            raise ValidationError("diagram action is not a vertex bijection")
        for v in g.vertices:
            if g.length_of[v] != g.length_of[aut.vmap[v]]:
                raise ValidationError(f"diagram action changes the length of {v!r}")
        for e in g.edges:
            image = frozenset(aut.vmap[v] for v in e.members)
            kind = edge_set.get((aut.label_image(e.label), image))
            if kind is None:
                raise ValidationError(f"image of edge {e.key()} under the action is not an edge")
            if kind != e.kind:
                raise ValidationError(f"image of edge {e.key()} changes kind")
    if g.coloring is not None:
        colors = dict(g.coloring)
        if sorted(colors) != list(g.vertices):
            raise ValidationError("coloring must assign a group element to every vertex")
        for aut in g.omega_action:
            for v in g.vertices:
                expected = tuple(aut.element[i] for i in colors[v])
                if colors[aut.vmap[v]] != expected:
                    raise ValidationError(
                        f"coloring is not equivariant at vertex {v!r}")


# ---------------------------------------------------------------------------
# Quotient and unit-color section
# ---------------------------------------------------------------------------

def gamma0(g: AffineOrbitHypergraph) -> OrbitHypergraph:
    """Quotient by the diagram action, graded by the inherited length.

    Each quotient vertex keeps the edges of its smallest representative, so
    the result is an honest labeled hypergraph; incompatible actions are
    reported as validation errors.
    """
    closure = close_under_composition(g.omega_action) if g.omega_action else []
    rep = {v: v for v in g.vertices}
    for aut in closure:
        for v in g.vertices:
            a, b = rep[v], rep[aut.vmap[v]]
            if a != b:
                lo, hi = min(a, b), max(a, b)
                for u in g.vertices:
                    if rep[u] == hi:
                        rep[u] = lo
    reps = sorted({rep[v] for v in g.vertices})
    graph = g.as_hypergraph()
    q_edges: dict = {}
    for v in reps:
        for label in g.labels:
            e = graph.edge_at(label, v)
            members = frozenset(rep[m] for m in e.members)
            key = (label, members)
            if key in q_edges and q_edges[key] != e.kind:
                raise ValidationError("incompatible action: conflicting edge kinds in quotient")
            q_edges[key] = e.kind
    return make_hypergraph(
        [(v, g.length_of[v]) for v in reps],
        [(label, members, kind) for (label, members), kind in q_edges.items()],
        mode=RATIONAL_MODE, labels=g.labels)


def gamma1(g: AffineOrbitHypergraph) -> OrbitHypergraph:
    """Induced sub-hypergraph on the vertices colored by the identity."""
    if g.coloring is None:
        raise ValidationError("unit-color section requires a coloring")
    ident = g.identity_element()
    colors = dict(g.coloring)
    keep = {v for v in g.vertices if colors[v] == ident}
    edges = []
    for e in g.edges:
        members = e.members & keep
        if members:
            edges.append((e.label, members, e.kind))
    return make_hypergraph([(v, g.length_of[v]) for v in sorted(keep)], edges,
                           mode=RATIONAL_MODE, labels=g.labels)


# ---------------------------------------------------------------------------
# Affine support function
# ---------------------------------------------------------------------------

def zero_length_full_vertices(g: OrbitHypergraph) -> tuple[str, ...]:
    """Full vertices of length zero (the grading is stored in the ranks)."""
    return tuple(v for v in g.vertices if g.rank_of[v] == 0 and is_full(g, v))


def affine_support_function(g0: OrbitHypergraph) -> SupportFunction:
    """Support function graded by length, based at the length-zero layer.

    Identical induction to the spherical case except that the base is the
    length-zero layer (full vertices map to themselves, the rest to zero)
    and vertices of positive length are solved in grading order; every edge
    is re-checked at the end.
    """
    full = set(zero_length_full_vertices(g0))
    base = {}
    for v in g0.vertices:
        if g0.rank_of[v] == 0:
            base[v] = {v: 1} if v in full else {}
    generators, values = _support_solve(
        g0.vertices, g0.rank_of, base, sorted(g0.edges, key=lambda e: e.key()))
    return SupportFunction(tuple(sorted(full)), values)


# ---------------------------------------------------------------------------
# Twisted harmonic functions
# ---------------------------------------------------------------------------

def _twist(character: OmegaCharacter, element: Perm) -> tuple[int, int]:
    """Exponent and order of (chi^{-1} chi_0) at a length-zero element."""
    m = character.order if character.order % 2 == 0 else character.order * 2
    exp = (-character.exponent(element) * (m // character.order)) % m
    if perm_sign(element) == -1:
        exp = (exp + m // 2) % m
    return exp, m


def _reduced_twist(character: OmegaCharacter, elements) -> dict:
    """Twist exponents over the given elements, reduced to minimal order."""
    raw = {}
    m = 2 * character.order if character.order % 2 else character.order
    for e in elements:
        raw[e], m = _twist(character, e)
    from math import gcd
    d = m
    for k in raw.values():
        d = gcd(d, k)
    order = m // d if d else 1
    return {"order": max(order, 1), "exponents": {e: k // d if d else 0 for e, k in raw.items()}}


def _stabilizer_data(g1, closure, stabilizers):
    data = {}
    for v in g1.vertices:
        if g1.rank_of[v] != 0:
            continue
        computed = {aut.element for aut in closure if aut.vmap[v] == v}
        if stabilizers is not None and v in stabilizers:
            stored = {tuple(e) for e in stabilizers[v]}
            moved = {g for g in stored
                     if g != tuple(range(len(g))) and g not in computed}
            if moved:
                raise ValidationError(
                    f"stored stabilizer at {v!r} contains elements that move the vertex")
            data[v] = stored
        else:
            data[v] = computed
    return data


def twisted_harmonic_exists(g1: OrbitHypergraph, h_action, character: OmegaCharacter,
                            stabilizers=None) -> bool:
    """Existence of a nonzero equivariantly twisted harmonic function.

    True exactly when the length-zero full layer is nonempty and the
    twisted character is trivial on every recorded stabilizer image.
    """
    closure = close_under_composition(h_action) if h_action else []
    s_verts = zero_length_full_vertices(g1)
    if not s_verts:
        return False
    data = _stabilizer_data(g1, closure, stabilizers)
    for v in s_verts:
        twist = _reduced_twist(character, data[v])
        if any(k != 0 for k in twist["exponents"].values()):
            return False
    return True


def twisted_harmonic_witness(g1: OrbitHypergraph, h_action, character: OmegaCharacter,
                             stabilizers=None) -> dict | None:
    """A witness function for `twisted_harmonic_exists`, or None.

    Built by weighting one orbit of the length-zero full layer with the
    twisted character and extending through the support function; the
    result is harmonic and satisfies the equivariance equation on every
    translate of the given action.
    """
    if not twisted_harmonic_exists(g1, h_action, character, stabilizers):
        return None
    closure = close_under_composition(h_action) if h_action else []
    s_verts = zero_length_full_vertices(g1)
    x0 = min(s_verts)
    phi: dict = {}
    if closure:
        twist = _reduced_twist(character, [aut.element for aut in closure])
        order = twist["order"]
        for aut in closure:
            y = aut.vmap[x0]
            value = Cyc.zeta_power(order, (-twist["exponents"][aut.element]) % order)
            if y in phi and not (phi[y] - value).is_zero():
                raise InconsistencyError("orbit weighting is not well defined")
            phi[y] = value
    else:
        order = 1
        phi[x0] = Cyc.zeta_power(order, 0)
    for v in s_verts:
        phi.setdefault(v, Cyc.zero(order))
    support = affine_support_function(g1)
    out = {}
    for v in g1.vertices:
        total = Cyc.zero(order)
        for s, c in support.value(v).items():
            total = total + phi[s] * c
        out[v] = total
    return out


def check_twisted_equivariance(g1: OrbitHypergraph, h_action, character: OmegaCharacter,
                               phi: dict) -> bool:
    closure = close_under_composition(h_action) if h_action else []
    elements = [aut.element for aut in closure]
    twist = _reduced_twist(character, elements) if elements else {"order": 1, "exponents": {}}
    order = twist["order"]
    for aut in closure:
        factor = Cyc.zeta_power(order, (-twist["exponents"][aut.element]) % order)
        for v in g1.vertices:
            lhs = phi[aut.vmap[v]]
            rhs = phi[v] * factor
            if not (lhs - rhs).is_zero():
                return False
    return True


def affine_to_json_dict(g: AffineOrbitHypergraph) -> dict:
    return {
        "vertices": [{"id": v, "l": l} for v, l in g.lengths],
        "labels": list(g.labels),
        "edges": [{"label": e.label, "members": sorted(e.members), "type": e.kind}
                  for e in g.edges],
        "omega_nodes": list(g.omega_nodes),
        "omega_action": [{"element": list(a.element), "vertex_map": dict(a.vertex_map)}
                         for a in g.omega_action],
        "coloring": ({v: list(c) for v, c in g.coloring}
                     if g.coloring is not None else None),
    }


# ---------------------------------------------------------------------------
# Shape constructors (the local configurations of the rank-two reduction)
# ---------------------------------------------------------------------------

def _alt_labels(labels):
    t0, t1 = labels
    return lambda i: t0 if i % 2 == 0 else t1


def shape_line(cols: int, labels=("0:0", "0:1"), full_base: bool = False,
               omega_nodes=None) -> AffineOrbitHypergraph:
    """A single-row configuration.

    With ``full_base`` the row closes into an even cycle, so the unique
    length-zero vertex is full and the support function alternates sign
    with the length parity; without it the row is a path whose ends carry
    size-one edges, the base vertex is not full and the support function
    vanishes identically.
    """
    if cols < 3:
        raise ValidationError("line needs at least 3 columns")
    t = _alt_labels(labels)
    nodes = tuple(omega_nodes) if omega_nodes is not None else tuple(labels)
    if full_base:
        if cols % 2 != 0:
            raise ValidationError("a closed line needs an even number of columns")
        verts = [(f"v{i}", min(i, cols - i)) for i in range(cols)]
        edges = [(t(i), frozenset({f"v{i}", f"v{(i + 1) % cols}"}), "U")
                 for i in range(cols)]
    else:
        verts = [(f"v{i}", i) for i in range(cols)]
        edges = [(t(i), frozenset({f"v{i}", f"v{i + 1}"}), "U") for i in range(cols - 1)]
        edges.append((t(1), frozenset({"v0"}), "G"))
        edges.append((t(cols - 1), frozenset({f"v{cols - 1}"}), "G"))
    return make_affine(verts, edges, nodes, labels=sorted(set(labels)))


def shape_rectangle(cols: int, labels=("0:0", "0:1"), omega_nodes=None) -> AffineOrbitHypergraph:
    """Two staggered rows joined at both ends; the base vertex is full."""
    if cols < 2:
        raise ValidationError("rectangle needs at least 2 columns")
    t = _alt_labels(labels)
    nodes = tuple(omega_nodes) if omega_nodes is not None else tuple(labels)
    verts = [(f"a{i}", i) for i in range(cols)] + [(f"b{i}", i + 1) for i in range(cols)]
    edges = []
    for row in ("a", "b"):
        for i in range(cols - 1):
            edges.append((t(i), frozenset({f"{row}{i}", f"{row}{i + 1}"}), "U"))
    edges.append((t(1), frozenset({"a0", "b0"}), "T"))
    edges.append((t(cols - 1), frozenset({f"a{cols - 1}", f"b{cols - 1}"}), "T"))
    return make_affine(verts, edges, nodes, labels=sorted(set(labels)))


def shape_box(cols: int, labels=("0:0", "0:1"), omega_nodes=None) -> AffineOrbitHypergraph:
    """Four rows with size-four edges at both ends (two layers of a rectangle)."""
    if cols < 2:
        raise ValidationError("box needs at least 2 columns")
    t = _alt_labels(labels)
    nodes = tuple(omega_nodes) if omega_nodes is not None else tuple(labels)
    verts = []
    for layer, ofs in (("f", 0), ("k", 1)):
        for row in ("a", "b"):
            verts.extend((f"{row}{layer}{i}", i + ofs) for i in range(cols))
    edges = []
    for layer in ("f", "k"):
        for row in ("a", "b"):
            for i in range(cols - 1):
                edges.append((t(i), frozenset({f"{row}{layer}{i}", f"{row}{layer}{i + 1}"}), "U"))
    edges.append((t(1), frozenset({"af0", "bf0", "ak0", "bk0"}), "T"))
    edges.append((t(cols - 1),
                  frozenset({f"af{cols - 1}", f"bf{cols - 1}", f"ak{cols - 1}", f"bk{cols - 1}"}),
                  "T"))
    return make_affine(verts, edges, nodes, labels=sorted(set(labels)))

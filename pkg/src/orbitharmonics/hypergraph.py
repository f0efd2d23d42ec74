"""The orbit hypergraph engine.

Vertices are ranked orbits; for each label the hyperedges partition the
vertex set.  Over the algebraic closure the edges come in four kinds with
fixed sizes (G:1, U:2, T:3, N:2) and a unique top vertex; in rational mode
sizes may deviate, which is how the finite-field graphs produced by the
delete/double field operations are represented.

The two computations everything else leans on are the harmonic space (the
exact rational kernel of the edge-sum constraints) and the support
function (a formal-sum-valued function that restricts to the identity on
the full closed vertices and sums to zero over every edge).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from fractions import Fraction
from itertools import permutations

from .errors import InconsistencyError, ModeError, SchemaError, ValidationError
from . import linalg

CLOSED_MODE = "algebraically_closed"
RATIONAL_MODE = "rational"
MODES = (CLOSED_MODE, RATIONAL_MODE)

EDGE_KINDS = ("G", "U", "T", "N")
CLOSED_SIZES = {"G": 1, "U": 2, "T": 3, "N": 2}


@dataclass(frozen=True)
class Edge:
    label: str
    members: frozenset
    kind: str

    def sorted_members(self) -> tuple[str, ...]:
        return tuple(sorted(self.members))

    def key(self):
        return (self.label, self.sorted_members())


@dataclass(frozen=True)
class OrbitHypergraph:
    vertices: tuple[str, ...]
    ranks: tuple[tuple[str, int], ...]
    labels: tuple[str, ...]
    edges: tuple[Edge, ...]
    mode: str = CLOSED_MODE

    @property
    def rank_of(self) -> dict:
        cached = self.__dict__.get("_rank_cache")
        if cached is None:
            cached = dict(self.ranks)
            self.__dict__["_rank_cache"] = cached
        return cached

    def edges_with_label(self, label: str) -> list[Edge]:
        return [e for e in self.edges if e.label == label]

    def edge_at(self, label: str, vertex: str) -> Edge:
        for e in self.edges:
            if e.label == label and vertex in e.members:
                return e
        raise ValidationError(f"vertex {vertex!r} has no edge with label {label!r}")

    def min_rank(self) -> int:
        return min(self.rank_of.values())

    def max_rank(self) -> int:
        return max(self.rank_of.values())

    def closed_vertices(self) -> tuple[str, ...]:
        m = self.min_rank()
        return tuple(v for v in self.vertices if self.rank_of[v] == m)


def make_hypergraph(vertices, edges, mode=CLOSED_MODE, labels=None) -> OrbitHypergraph:
    """Canonical constructor: sorts everything, then validates."""
    ranks = tuple(sorted((str(v), int(r)) for v, r in vertices))
    verts = tuple(v for v, _ in ranks)
    edge_objs = tuple(sorted(
        (Edge(str(lbl), frozenset(str(m) for m in members), str(kind))
         for lbl, members, kind in edges),
        key=lambda e: e.key()))
    if labels is None:
        labels = sorted({e.label for e in edge_objs})
    g = OrbitHypergraph(verts, ranks, tuple(labels), edge_objs, mode)
    validate(g)
    return g


def validate(g: OrbitHypergraph) -> None:
    """Check all structural invariants; raises ValidationError naming the first failure."""
    if g.mode not in MODES:
        raise ValidationError(f"unknown field mode {g.mode!r}")
    if len(set(g.vertices)) != len(g.vertices):
        raise ValidationError("duplicate vertex ids")
    for v, r in g.ranks:
        if r < 0:
            raise ValidationError(f"vertex {v!r} has negative rank")
    for e in g.edges:
        if e.kind not in EDGE_KINDS:
            raise ValidationError(f"edge {e.key()} has unknown kind {e.kind!r}")
        if e.label not in g.labels:
            raise ValidationError(f"edge {e.key()} uses undeclared label")
        if not e.members:
            raise ValidationError(f"edge with label {e.label!r} is empty")
        if not e.members <= set(g.vertices):
            raise ValidationError(f"edge {e.key()} mentions unknown vertices")
    for label in g.labels:
        seen: dict[str, Edge] = {}
        for e in g.edges_with_label(label):
            for v in e.members:
                if v in seen:
                    raise ValidationError(
                        f"label {label!r}: edges {seen[v].key()} and {e.key()} overlap at {v!r}")
                seen[v] = e
        missing = set(g.vertices) - set(seen)
        if missing:
            raise ValidationError(
                f"label {label!r}: vertices {sorted(missing)} are not covered by any edge")
    if g.mode == CLOSED_MODE:
        for e in g.edges:
            want = CLOSED_SIZES[e.kind]
            if len(e.members) != want:
                raise ValidationError(
                    f"edge {e.key()} of kind {e.kind} has size {len(e.members)}, expected {want}")
            if len(e.members) >= 2:
                ranks = sorted(g.rank_of[v] for v in e.members)
                top = ranks[-1]
                if ranks[-2] == top:
                    raise ValidationError(
                        f"edge {e.key()} has no unique vertex of maximal rank")
                if any(top - r > 1 for r in ranks):
                    raise ValidationError(
                        f"edge {e.key()} spans ranks differing by more than 1 from its top")


# ---------------------------------------------------------------------------
# Harmonic space
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HarmonicSpace:
    """Integer basis of the space of functions with zero sum over every edge."""

    vertices: tuple[str, ...]
    basis: tuple[tuple[int, ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def basis_functions(self) -> list[dict]:
        return [dict(zip(self.vertices, vec)) for vec in self.basis]


def constraint_matrix(g: OrbitHypergraph) -> list[list[int]]:
    index = {v: i for i, v in enumerate(g.vertices)}
    rows = []
    for e in sorted(g.edges, key=lambda e: e.key()):
        row = [0] * len(g.vertices)
        for v in e.members:
            row[index[v]] += 1
        rows.append(row)
    return rows


def harmonic_space(g: OrbitHypergraph) -> HarmonicSpace:
    basis = linalg.kernel_basis(constraint_matrix(g), len(g.vertices))
    return HarmonicSpace(g.vertices, tuple(basis))


def is_harmonic(g: OrbitHypergraph, values: dict) -> bool:
    for e in g.edges:
        members = iter(e.members)
        total = values[next(members)]
        for v in members:
            total = total + values[v]
        if total != 0:
            return False
    return True


# ---------------------------------------------------------------------------
# Full closed vertices and the support function
# ---------------------------------------------------------------------------

def is_full(g: OrbitHypergraph, v: str) -> bool:
    return all(len(g.edge_at(label, v).members) >= 2 for label in g.labels)


def full_closed_vertices(g: OrbitHypergraph) -> tuple[str, ...]:
    """Minimal-rank vertices all of whose edges have size at least two."""
    return tuple(v for v in g.closed_vertices() if is_full(g, v))


@dataclass(frozen=True)
class SupportFunction:
    """Map from vertices to formal integer combinations of the full closed set."""

    generators: tuple[str, ...]
    values: tuple[tuple[str, tuple[tuple[str, int], ...]], ...]

    def value(self, v: str) -> dict:
        return dict(dict(self.values)[v])

    def as_dict(self) -> dict:
        return {v: dict(c) for v, c in self.values}

    def coordinate(self, generator: str) -> dict:
        """The vertex function obtained by reading off one generator's coefficient."""
        return {v: dict(c).get(generator, 0) for v, c in self.values}


def _support_solve(vertex_order, grading, base_values, edges, label_of_edge=None):
    """Shared inductive construction for spherical and affine support functions.

    ``base_values`` fixes the function on the base layer; higher vertices
    are solved one edge at a time in grading order, with a global linear
    solve as fallback when no single edge determines a vertex (this happens
    only away from the algebraically closed case).  Raises
    InconsistencyError naming an offending edge when no consistent
    assignment exists.
    """
    generators = sorted({s for val in base_values.values() for s in val})
    assigned: dict[str, dict] = {v: dict(val) for v, val in base_values.items()}
    pending = [v for v in _by_grading(vertex_order, grading) if v not in assigned]

    def edge_deficit(e):
        missing = [v for v in e.members if v not in assigned]
        return missing

    progress = True
    while progress:
        progress = False
        for v in pending:
            if v in assigned:
                continue
            for e in edges:
                if v not in e.members:
                    continue
                missing = edge_deficit(e)
                if missing == [v]:
                    total: dict = {}
                    for u in e.members:
                        if u == v:
                            continue
                        for s, c in assigned[u].items():
                            total[s] = total.get(s, 0) + c
                    assigned[v] = {s: -c for s, c in total.items() if c != 0}
                    progress = True
                    break
    unknown = [v for v in pending if v not in assigned]
    if unknown:
        _support_global_solve(unknown, assigned, edges, generators)
    for e in edges:
        total: dict = {}
        for u in e.members:
            for s, c in assigned[u].items():
                total[s] = total.get(s, 0) + c
        if any(c != 0 for c in total.values()):
            label = e.label if label_of_edge is None else label_of_edge(e)
            raise InconsistencyError(
                f"edge {label!r}:{e.sorted_members()} sums to {total}, not zero; "
                "input does not arise from a valid symmetric space")
    values = tuple(sorted(
        (v, tuple(sorted((s, c) for s, c in assigned[v].items() if c != 0)))
        for v in assigned))
    return generators, values


def _by_grading(vertex_order, grading):
    return sorted(vertex_order, key=lambda v: (grading[v], v))


def _support_global_solve(unknown, assigned, edges, generators):
    """Solve the remaining edge-sum system exactly; free variables go to zero."""
    cols = {v: i for i, v in enumerate(sorted(unknown))}
    for gname in generators:
        rows, rhs = [], []
        for e in edges:
            row = [0] * len(cols)
            const = 0
            touched = False
            for u in e.members:
                if u in cols:
                    row[cols[u]] += 1
                    touched = True
                else:
                    const += assigned[u].get(gname, 0)
            if touched:
                rows.append(row)
                rhs.append(-const)
        if rows:
            sol = linalg.solve(rows, rhs)
        else:
            sol = [Fraction(0)] * len(cols)
        if sol is None:
            raise InconsistencyError(
                "edge-sum system has no solution; "
                "input does not arise from a valid symmetric space")
        for v, i in cols.items():
            if sol[i] != int(sol[i]):
                raise InconsistencyError(f"support value at {v!r} is not integral")
            c = int(sol[i])
            if c:
                assigned.setdefault(v, {})[gname] = c
    for v in unknown:
        assigned.setdefault(v, {})


def support_function(g: OrbitHypergraph) -> SupportFunction:
    """The inductive support function of the hypergraph.

    Initialized on the closed (minimal-rank) layer: the identity on full
    closed vertices, zero elsewhere; each higher vertex is solved from an
    incident edge whose other members are known, and every edge is
    re-checked afterwards so the result is order-independent or an error.
    """
    full = set(full_closed_vertices(g))
    base = {}
    for v in g.closed_vertices():
        base[v] = {v: 1} if v in full else {}
    generators, values = _support_solve(
        g.vertices, g.rank_of, base, sorted(g.edges, key=lambda e: e.key()))
    return SupportFunction(tuple(sorted(full)), values)


def verify_dimension_theorem(g: OrbitHypergraph) -> bool:
    """Whether the number of full closed vertices equals the harmonic dimension.

    Only meaningful over the algebraic closure; rational mode is rejected.
    """
    if g.mode != CLOSED_MODE:
        raise ModeError("the dimension theorem applies to algebraically closed mode only")
    return len(full_closed_vertices(g)) == harmonic_space(g).dimension


# ---------------------------------------------------------------------------
# Quotients and products
# ---------------------------------------------------------------------------

def _check_automorphism(g: OrbitHypergraph, mapping: dict) -> None:
    if sorted(mapping) != sorted(g.vertices) or sorted(mapping.values()) != sorted(g.vertices):
        raise ValidationError("automorphism is not a bijection on the vertex set")
    for v in g.vertices:
        if g.rank_of[v] != g.rank_of[mapping[v]]:
            raise ValidationError(f"automorphism does not preserve the rank of {v!r}")
    keys = {(e.label, frozenset(e.members)): e.kind for e in g.edges}
    for e in g.edges:
        image = frozenset(mapping[v] for v in e.members)
        kind = keys.get((e.label, image))
        if kind is None:
            raise ValidationError(f"image of edge {e.key()} is not an edge")
        if kind != e.kind:
            raise ValidationError(f"image of edge {e.key()} changes kind")


def _collapse_kind(kind: str, size: int) -> str:
    if size == 1:
        return "G"
    if kind == "T" and size == 2:
        return "N"
    return kind


def quotient_by_automorphisms(g: OrbitHypergraph, automorphisms) -> OrbitHypergraph:
    """Quotient by a group of label-, rank- and kind-preserving automorphisms.

    Vertices become orbits (named by their smallest member), edges become
    image edges with multiplicity collapsed.  An edge that shrinks is
    retyped by its new size (a T-edge collapsing to two vertices is an
    N-edge, anything collapsing to one vertex is a G-edge), matching the
    passage from the connected-group graph to the full-fixed-points graph.
    """
    maps = [dict(m) for m in automorphisms]
    for m in maps:
        _check_automorphism(g, m)
    rep = {v: v for v in g.vertices}

    def find(v):
        while rep[v] != v:
            rep[v] = rep[rep[v]]
            v = rep[v]
        return v

    for m in maps:
        for v in g.vertices:
            a, b = find(v), find(m[v])
            if a != b:
                if b < a:
                    a, b = b, a
                rep[b] = a
    orbit = {v: find(v) for v in g.vertices}
    verts = sorted({orbit[v] for v in g.vertices})
    new_edges = {}
    for e in g.edges:
        members = frozenset(orbit[v] for v in e.members)
        kind = _collapse_kind(e.kind, len(members))
        key = (e.label, members)
        if key in new_edges and new_edges[key] != kind:
            raise ValidationError(f"quotient produced conflicting kinds for edge {key}")
        new_edges[key] = kind
    return make_hypergraph(
        [(v, g.rank_of[v]) for v in verts],
        [(label, members, kind) for (label, members), kind in new_edges.items()],
        mode=g.mode,
        labels=g.labels,
    )


def relabel(g: OrbitHypergraph, prefix: str) -> OrbitHypergraph:
    """Prefix every label; used to make label sets disjoint before products."""
    return make_hypergraph(
        g.ranks,
        [(prefix + e.label, e.members, e.kind) for e in g.edges],
        mode=g.mode,
        labels=[prefix + l for l in g.labels],
    )


def product(g1: OrbitHypergraph, g2: OrbitHypergraph, sep: str = ",") -> OrbitHypergraph:
    """Product hypergraph: vertex pairs, additive rank, edges from one side at a time."""
    if set(g1.labels) & set(g2.labels):
        raise ValidationError("label sets must be disjoint; relabel one factor first")
    if g1.mode != g2.mode:
        raise ValidationError("factors must live over the same field mode")

    def pair(a, b):
        return f"{a}{sep}{b}"

    verts = [(pair(a, b), g1.rank_of[a] + g2.rank_of[b])
             for a in g1.vertices for b in g2.vertices]
    edges = []
    for e in g1.edges:
        for b in g2.vertices:
            edges.append((e.label, frozenset(pair(a, b) for a in e.members), e.kind))
    for e in g2.edges:
        for a in g1.vertices:
            edges.append((e.label, frozenset(pair(a, b) for b in e.members), e.kind))
    return make_hypergraph(verts, edges, mode=g1.mode,
                           labels=list(g1.labels) + list(g2.labels))


# ---------------------------------------------------------------------------
# Partial order, density and the finite-field pullback
# ---------------------------------------------------------------------------

def reachable_up(g: OrbitHypergraph) -> dict:
    """Transitive closure of the within-edge rank order: v -> set above v."""
    above = {v: {v} for v in g.vertices}
    covers = {v: set() for v in g.vertices}
    for e in g.edges:
        for u in e.members:
            for w in e.members:
                if g.rank_of[u] < g.rank_of[w]:
                    covers[u].add(w)
    changed = True
    while changed:
        changed = False
        for v in g.vertices:
            new = set(above[v])
            for w in covers[v]:
                new |= above[w]
            if new != above[v]:
                above[v] = new
                changed = True
    return above


def dense_vertices(g: OrbitHypergraph) -> tuple[str, ...]:
    m = g.max_rank()
    return tuple(v for v in g.vertices if g.rank_of[v] == m)


def multiplicity(g: OrbitHypergraph) -> dict:
    """Number of dense vertices lying above each vertex (inclusively)."""
    above = reachable_up(g)
    dense = set(dense_vertices(g))
    return {v: len(above[v] & dense) for v in g.vertices}


def check_projection(g_f: OrbitHypergraph, g_fbar: OrbitHypergraph, proj: dict) -> None:
    if sorted(proj) != sorted(g_f.vertices):
        raise ValidationError("projection must be defined on every rational vertex")
    if set(proj.values()) != set(g_fbar.vertices):
        raise ValidationError("projection must be surjective onto the closed-mode vertices")
    if set(g_f.labels) != set(g_fbar.labels):
        raise ValidationError("projection requires identical label sets")
    for e in g_f.edges:
        images = {proj[v] for v in e.members}
        targets = [t for t in g_fbar.edges_with_label(e.label) if images <= t.members]
        if not targets:
            raise ValidationError(
                f"image of edge {e.key()} is not contained in a single edge")


def finite_field_pullback(g_f: OrbitHypergraph, g_fbar: OrbitHypergraph,
                          proj: dict, phi: dict) -> dict:
    """Pull a harmonic function back along the rational-to-closed projection.

    The value at a rational vertex is the downstairs value weighted by the
    number of dense rational vertices above it.
    """
    check_projection(g_f, g_fbar, proj)
    m = multiplicity(g_f)
    return {v: m[v] * phi[proj[v]] for v in g_f.vertices}


# ---------------------------------------------------------------------------
# Field operations: delete and double
# ---------------------------------------------------------------------------

def _edge_top_rank(g, e):
    return max(g.rank_of[v] for v in e.members)


def rational_form_delete(g: OrbitHypergraph, edge: Edge) -> OrbitHypergraph:
    """Remove the lower vertices of an N- or T-edge and propagate.

    Propagation closure: everything below a deleted vertex goes, everything
    joined to a deleted vertex by a U-edge goes, and everything joined by
    an N-edge goes when it has the same rank as the deleted vertex.  The
    result is a rational-mode hypergraph.
    """
    if edge not in g.edges:
        raise ValidationError("edge does not belong to the hypergraph")
    if edge.kind not in ("N", "T"):
        raise ValidationError(f"delete applies to N- or T-edges, not {edge.kind}")
    top = _edge_top_rank(g, edge)
    doomed = {v for v in edge.members if g.rank_of[v] < top}
    above = reachable_up(g)
    changed = True
    while changed:
        changed = False
        for v in list(doomed):
            for u in g.vertices:
                if u in doomed:
                    continue
                if v in above[u] and u != v:
                    doomed.add(u)   # u lies below a deleted vertex
                    changed = True
        for e in g.edges:
            hit = e.members & doomed
            if not hit:
                continue
            for u in e.members - doomed:
                if e.kind == "U":
                    doomed.add(u)
                    changed = True
                elif e.kind == "N" and any(g.rank_of[u] == g.rank_of[d] for d in hit):
                    doomed.add(u)
                    changed = True
    survivors = [v for v in g.vertices if v not in doomed]
    edges = []
    for e in g.edges:
        members = e.members - doomed
        if members:
            edges.append((e.label, members, e.kind))
    return make_hypergraph([(v, g.rank_of[v]) for v in survivors], edges,
                           mode=RATIONAL_MODE, labels=g.labels)


def rational_form_double(g: OrbitHypergraph, vertex: str) -> OrbitHypergraph:
    """Double a vertex that is maximal in an N- or T-edge and propagate.

    Everything above a doubled vertex doubles, and everything joined to a
    doubled vertex by a U-edge doubles.  Doubled copies merge into their
    N/T edges, while a U-edge all of whose members doubled splits into two
    parallel copies and a G-edge splits into one copy per vertex copy.
    """
    if vertex not in g.vertices:
        raise ValidationError(f"unknown vertex {vertex!r}")
    anchor = [e for e in g.edges
              if vertex in e.members and e.kind in ("N", "T")
              and g.rank_of[vertex] == _edge_top_rank(g, e)]
    if not anchor:
        raise ValidationError(
            f"vertex {vertex!r} is not maximal in any N- or T-edge")
    above = reachable_up(g)
    doubled = {vertex}
    changed = True
    while changed:
        changed = False
        for u in g.vertices:
            if u in doubled:
                continue
            if any(u in above[d] and u != d for d in doubled):
                doubled.add(u)
                changed = True
                continue
            for e in g.edges:
                if e.kind == "U" and u in e.members and e.members & doubled:
                    doubled.add(u)
                    changed = True
                    break

    def copies(v):
        return (f"{v}.1", f"{v}.2") if v in doubled else (v,)

    verts = []
    for v in g.vertices:
        for c in copies(v):
            verts.append((c, g.rank_of[v]))
    edges = []
    for e in g.edges:
        hit = e.members & doubled
        if not hit:
            edges.append((e.label, e.members, e.kind))
        elif e.kind == "U" and hit == e.members:
            for i in (0, 1):
                edges.append((e.label,
                              frozenset(copies(v)[i] for v in e.members), e.kind))
        elif e.kind == "G":
            v = next(iter(e.members))
            for c in copies(v):
                edges.append((e.label, frozenset([c]), e.kind))
        else:
            members = frozenset(c for v in e.members for c in copies(v))
            edges.append((e.label, members, e.kind))
    return make_hypergraph(verts, edges, mode=RATIONAL_MODE, labels=g.labels)


# ---------------------------------------------------------------------------
# Isomorphism and serialization
# ---------------------------------------------------------------------------

def _edge_multiset(g: OrbitHypergraph, mapping: dict) -> set:
    return {(e.label, frozenset(mapping[v] for v in e.members), e.kind) for e in g.edges}


def is_isomorphic(g1: OrbitHypergraph, g2: OrbitHypergraph) -> bool:
    """Label- and rank-preserving isomorphism test (brute force, small graphs)."""
    if (len(g1.vertices) != len(g2.vertices) or set(g1.labels) != set(g2.labels)
            or g1.mode != g2.mode or len(g1.edges) != len(g2.edges)):
        return False
    by_rank1: dict[int, list] = {}
    by_rank2: dict[int, list] = {}
    for v in g1.vertices:
        by_rank1.setdefault(g1.rank_of[v], []).append(v)
    for v in g2.vertices:
        by_rank2.setdefault(g2.rank_of[v], []).append(v)
    if {r: len(vs) for r, vs in by_rank1.items()} != {r: len(vs) for r, vs in by_rank2.items()}:
        return False
    target = {(e.label, e.members, e.kind) for e in g2.edges}
    ranks = sorted(by_rank1)

    def extend(i, mapping):
        if i == len(ranks):
            return _edge_multiset(g1, mapping) == target
        src = by_rank1[ranks[i]]
        for image in permutations(by_rank2[ranks[i]]):
            mapping.update(zip(src, image))
            # prune on edges fully inside the mapped set
            ok = True
            mapped = set(mapping)
            for e in g1.edges:
                if e.members <= mapped:
                    if (e.label, frozenset(mapping[v] for v in e.members), e.kind) not in target:
                        ok = False
                        break
            if ok and extend(i + 1, mapping):
                return True
            for v in src:
                del mapping[v]
        return False

    return extend(0, {})


def to_json_dict(g: OrbitHypergraph) -> dict:
    return {
        "vertices": [{"id": v, "rank": r} for v, r in g.ranks],
        "labels": list(g.labels),
        "edges": [{"label": e.label, "members": sorted(e.members), "type": e.kind}
                  for e in g.edges],
        "mode": g.mode,
    }


def from_json_dict(data: dict) -> OrbitHypergraph:
    try:
        vertices = [(v["id"], v["rank"]) for v in data["vertices"]]
        edges = [(e["label"], frozenset(e["members"]), e["type"]) for e in data["edges"]]
        mode = data.get("mode", CLOSED_MODE)
        labels = data.get("labels")
    except (KeyError, TypeError) as exc:
        raise SchemaError(f"malformed hypergraph JSON: {exc}") from exc
    return make_hypergraph(vertices, edges, mode=mode, labels=labels)


def to_json(g: OrbitHypergraph) -> str:
    return json.dumps(to_json_dict(g), indent=2, sort_keys=True)

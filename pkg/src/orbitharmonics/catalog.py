"""Curated symmetric-pair entries: involution data, hypergraph data,
length-zero annotations, and expected verdicts.

The catalog is the authority for everything the engine must not invent
(orbit sets, stabilizer annotations); every entry is self-verifying: on
load, all stored expectations are recomputed from the stored data and any
mismatch is an error naming the entry and field.  Entries ship as
versioned JSON files inside the package.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .affine import (
    AffineAut,
    AffineOrbitHypergraph,
    gamma0,
    gamma1,
    make_affine,
)
from .errors import CatalogError, SchemaError
from .hypergraph import (
    OrbitHypergraph,
    check_projection,
    from_json_dict,
    full_closed_vertices,
    harmonic_space,
    to_json_dict,
)
from .involution import InvolutionDatum, quasi_split_flag, validate_involution
from .dualgroup import steinberg_chi0_distinguished
from .rootsystem import (
    Perm,
    cartan_datum,
    fundamental_group,
    generate_roots,
    root_system,
)

SCHEMA = "catalog-v1"


@dataclass(frozen=True)
class AffineData:
    graph: AffineOrbitHypergraph
    h_action: tuple[AffineAut, ...]
    stabilizers: tuple[tuple[str, tuple[Perm, ...]], ...]
    gamma0_graph: OrbitHypergraph | None
    gamma1_graph: OrbitHypergraph | None

    def stabilizer_map(self) -> dict:
        return {v: list(elems) for v, elems in self.stabilizers}


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    source: str
    involution: InvolutionDatum
    hypergraph_closed: OrbitHypergraph
    hypergraph_rational: OrbitHypergraph | None
    projection: tuple[tuple[str, str], ...] | None
    omega_h: tuple[Perm, ...]
    omega_h_verified: bool
    affine: AffineData | None
    derived: dict | None
    expected: dict
    h_factor_description: tuple[str, ...]
    raw: dict

    def projection_map(self) -> dict | None:
        return dict(self.projection) if self.projection is not None else None


def _involution_from_json(data: dict) -> InvolutionDatum:
    try:
        ambient = data["ambient"]
        factors = tuple((k, int(r)) for k, r in ambient["factors"])
        sigma = data["sigma"]
        name = data.get("name", "")
    except (KeyError, TypeError) as exc:
        raise SchemaError(f"malformed involution JSON: {exc}") from exc
    if ambient.get("cartan") is not None:
        rs = generate_roots(cartan_datum(factors, cartan=ambient["cartan"]))
    else:
        rs = root_system(factors)
    return validate_involution(rs, sigma, name)


def _aut_from_json(nodes, data: dict) -> AffineAut:
    return AffineAut(tuple(nodes), tuple(data["element"]),
                     tuple(sorted((k, v) for k, v in data["vertex_map"].items())))


def _affine_from_json(data: dict) -> AffineData:
    gd = data["graph"]
    nodes = tuple(gd["omega_nodes"])
    coloring = None
    if gd.get("coloring") is not None:
        coloring = [(v, tuple(c)) for v, c in gd["coloring"].items()]
    graph = make_affine(
        [(v["id"], v["l"]) for v in gd["vertices"]],
        [(e["label"], frozenset(e["members"]), e["type"]) for e in gd["edges"]],
        nodes,
        omega_action=[_aut_from_json(nodes, a) for a in gd.get("omega_action", [])],
        coloring=coloring,
        labels=gd.get("labels"),
    )
    h_action = tuple(_aut_from_json(nodes, a) for a in data.get("h_action", []))
    stabilizers = tuple(sorted(
        (v, tuple(tuple(e) for e in elems))
        for v, elems in data.get("stabilizers", {}).items()))
    g0 = from_json_dict(data["gamma0"]) if data.get("gamma0") else None
    g1 = from_json_dict(data["gamma1"]) if data.get("gamma1") else None
    return AffineData(graph, h_action, stabilizers, g0, g1)


def _check(entry: str, field: str, stored, recomputed):
    if stored != recomputed:
        raise CatalogError(
            f"entry {entry!r}, field {field!r}: stored {stored!r} "
            f"but recomputed {recomputed!r}")


def entry_from_json(data: dict) -> CatalogEntry:
    if data.get("schema") != SCHEMA:
        raise SchemaError(f"unknown catalog schema {data.get('schema')!r}")
    name = data["name"]
    inv = _involution_from_json(data["involution"])
    closed = from_json_dict(data["hypergraph_closed"])
    rational = (from_json_dict(data["hypergraph_rational"])
                if data.get("hypergraph_rational") else None)
    projection = (tuple(sorted(data["projection"].items()))
                  if data.get("projection") else None)
    omega_h = tuple(tuple(g) for g in data.get("omega_h", {}).get("generators", []))
    omega_h_verified = bool(data.get("omega_h", {}).get("verified", False))
    affine = _affine_from_json(data["affine"]) if data.get("affine") else None
    expected = dict(data["expected"])
    entry = CatalogEntry(
        name=name,
        source=data.get("source", ""),
        involution=inv,
        hypergraph_closed=closed,
        hypergraph_rational=rational,
        projection=projection,
        omega_h=omega_h,
        omega_h_verified=omega_h_verified,
        affine=affine,
        derived=data.get("derived"),
        expected=expected,
        h_factor_description=tuple(data.get("h_factor_description", [])),
        raw=data,
    )
    _self_verify(entry)
    return entry


def _self_verify(entry: CatalogEntry) -> None:
    name = entry.name
    exp = entry.expected
    _check(name, "quasi_split", bool(exp["quasi_split"]), quasi_split_flag(entry.involution))
    _check(name, "full_closed_count", int(exp["full_closed_count"]),
           len(full_closed_vertices(entry.hypergraph_closed)))
    _check(name, "harmonic_dim_closed", int(exp["harmonic_dim_closed"]),
           harmonic_space(entry.hypergraph_closed).dimension)
    _check(name, "st_chi0_distinguished", bool(exp["st_chi0_distinguished"]),
           steinberg_chi0_distinguished(entry.involution))
    if entry.hypergraph_rational is not None:
        if "harmonic_dim_rational" in exp and exp["harmonic_dim_rational"] is not None:
            _check(name, "harmonic_dim_rational", int(exp["harmonic_dim_rational"]),
                   harmonic_space(entry.hypergraph_rational).dimension)
        if entry.projection is not None:
            try:
                check_projection(entry.hypergraph_rational, entry.hypergraph_closed,
                                 entry.projection_map())
            except Exception as exc:
                raise CatalogError(f"entry {name!r}, field 'projection': {exc}") from exc
    aff_dynkin = fundamental_group(entry.involution.root_system)
    for g in entry.omega_h:
        if g not in aff_dynkin.omega:
            raise CatalogError(
                f"entry {name!r}, field 'omega_h': {g} is not a length-zero element")
    if entry.affine is not None:
        if tuple(entry.affine.graph.omega_nodes) != aff_dynkin.nodes:
            raise CatalogError(
                f"entry {name!r}, field 'affine': diagram nodes do not match the root system")
        for aut in entry.affine.graph.omega_action:
            if aut.element not in aff_dynkin.omega:
                raise CatalogError(
                    f"entry {name!r}, field 'affine': action element is not length-zero")
        if entry.affine.gamma0_graph is not None:
            _check(name, "affine.gamma0", to_json_dict(entry.affine.gamma0_graph),
                   to_json_dict(gamma0(entry.affine.graph)))
        if entry.affine.gamma1_graph is not None:
            _check(name, "affine.gamma1", to_json_dict(entry.affine.gamma1_graph),
                   to_json_dict(gamma1(entry.affine.graph)))


def load_catalog(paths=None) -> tuple[CatalogEntry, ...]:
    """Load and self-verify catalog entries.

    Without arguments, loads the packaged entries in their versioned
    order; otherwise loads the given JSON files in the given order.
    """
    entries = []
    if paths is None:
        root = resources.files("orbitharmonics").joinpath("data")
        files = sorted(p for p in root.iterdir() if p.name.endswith(".json"))
        for p in files:
            entries.append(entry_from_json(json.loads(p.read_text())))
    else:
        for p in paths:
            with open(p, "r", encoding="utf-8") as fh:
                entries.append(entry_from_json(json.load(fh)))
    names = [e.name for e in entries]
    if len(set(names)) != len(names):
        raise CatalogError("duplicate entry names in catalog")
    return tuple(entries)


_DEFAULT = None


def default_catalog() -> tuple[CatalogEntry, ...]:
    global _DEFAULT
    if _DEFAULT is None:
        _DEFAULT = load_catalog()
    return _DEFAULT


def entry_by_name(name: str, catalog=None) -> CatalogEntry:
    catalog = catalog if catalog is not None else default_catalog()
    for e in catalog:
        if e.name == name:
            return e
    raise KeyError(name)

import copy
import json

import pytest

from orbitharmonics.catalog import (
    default_catalog,
    entry_by_name,
    entry_from_json,
    load_catalog,
)
from orbitharmonics.errors import CatalogError, SchemaError
from orbitharmonics.hypergraph import (
    full_closed_vertices,
    harmonic_space,
    product,
    quotient_by_automorphisms,
    relabel,
    to_json_dict,
)
from orbitharmonics.involution import quasi_split_flag

REQUIRED = [
    "PGL2/T", "PGL2/N", "SL2/Gm", "PGL2xPGL2/PGL2", "PGL3/PO3", "PGL3/PGL2",
    "PSp4/PGL2", "PSp4/PGL2-folded", "G2/(PGL2xSL2)", "PGL3/P(GL1xGL2)",
    "PGL5/P(GL2xGL3)", "PGL2/TxPGL2/N",
]


def test_catalog_loads_required_entries(catalog):
    names = [e.name for e in catalog]
    for name in REQUIRED:
        assert name in names
    assert len(catalog) >= 12


def test_entry_lookup(catalog):
    assert entry_by_name("PGL3/PO3", catalog).name == "PGL3/PO3"
    with pytest.raises(KeyError):
        entry_by_name("nope", catalog)


def test_expectations_recomputed_on_load(catalog):
    for entry in catalog:
        assert quasi_split_flag(entry.involution) == entry.expected["quasi_split"]
        assert harmonic_space(entry.hypergraph_closed).dimension == \
            entry.expected["harmonic_dim_closed"]
        assert len(full_closed_vertices(entry.hypergraph_closed)) == \
            entry.expected["full_closed_count"]


def test_expectation_mismatch_names_entry_and_field(catalog):
    raw = copy.deepcopy(entry_by_name("PGL3/PO3", catalog).raw)
    raw["expected"]["harmonic_dim_closed"] = 7
    with pytest.raises(CatalogError, match="PGL3/PO3.*harmonic_dim_closed"):
        entry_from_json(raw)


def test_schema_error_on_unknown_version(catalog):
    raw = copy.deepcopy(entry_by_name("PGL2/T", catalog).raw)
    raw["schema"] = "catalog-v999"
    with pytest.raises(SchemaError):
        entry_from_json(raw)


def test_quotient_entry_regenerates(catalog):
    base = entry_by_name("PSp4/PGL2", catalog)
    folded = entry_by_name("PSp4/PGL2-folded", catalog)
    regenerated = quotient_by_automorphisms(
        base.hypergraph_closed, [folded.derived["automorphism"]])
    assert to_json_dict(regenerated) == to_json_dict(folded.hypergraph_closed)


def test_product_entry_regenerates(catalog):
    prod = entry_by_name("PGL2/TxPGL2/N", catalog)
    t = entry_by_name("PGL2/T", catalog)
    n = entry_by_name("PGL2/N", catalog)
    regenerated = product(relabel(t.hypergraph_closed, "L."),
                          relabel(n.hypergraph_closed, "R."))
    assert to_json_dict(regenerated) == to_json_dict(prod.hypergraph_closed)


def test_sl2_rational_dimension(catalog):
    entry = entry_by_name("SL2/Gm", catalog)
    assert harmonic_space(entry.hypergraph_rational).dimension == 3
    assert entry.expected["harmonic_dim_rational"] == 3


def test_quasi_split_iff_full_closed_nonempty(catalog):
    for entry in catalog:
        assert quasi_split_flag(entry.involution) == (
            len(full_closed_vertices(entry.hypergraph_closed)) > 0)


def test_export_roundtrip(tmp_path, catalog):
    for entry in catalog[:3]:
        path = tmp_path / "entry.json"
        path.write_text(json.dumps(entry.raw))
        loaded = load_catalog([path])
        assert loaded[0].name == entry.name
        assert to_json_dict(loaded[0].hypergraph_closed) == \
            to_json_dict(entry.hypergraph_closed)


def test_rank4_entry_consistency(catalog):
    entry = entry_by_name("PGL5/P(GL2xGL3)", catalog)
    g = entry.hypergraph_closed
    assert len(g.vertices) == 55
    assert len(g.labels) == 4
    assert harmonic_space(g).dimension == 1
    # the unique full closed orbit is the alternating sign string
    assert full_closed_vertices(g) == ("-+-+-",)


def test_rank4_matches_signed_matching_generator(catalog, clans_module):
    entry = entry_by_name("PGL5/P(GL2xGL3)", catalog)
    regenerated = clans_module.clan_hypergraph_data(2, 3)
    assert to_json_dict(entry.hypergraph_closed) == regenerated


def test_rank2_inner_matches_signed_matching_generator(catalog, clans_module):
    from orbitharmonics.hypergraph import from_json_dict, is_isomorphic
    entry = entry_by_name("PGL3/PGL2", catalog)
    generated = from_json_dict(clans_module.clan_hypergraph_data(1, 2))
    assert is_isomorphic(entry.hypergraph_closed, generated)


def test_default_catalog_cached():
    assert default_catalog() is default_catalog()

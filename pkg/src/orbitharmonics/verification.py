"""The cross-validation battery behind `verify-all`.

Every check is deterministic (the randomized battery runs from a fixed
seed) and emits one line per (entry, check); the caller decides how to
render failures.  These are the same invariants the acceptance tests
exercise, collected behind a single callable so the command line can run
them without pytest.
"""

from __future__ import annotations

import random
from fractions import Fraction

from . import linalg
from .affine import (
    affine_support_function,
    check_twisted_equivariance,
    close_under_composition,
    gamma0,
    gamma1,
    twisted_harmonic_exists,
    twisted_harmonic_witness,
    zero_length_full_vertices,
)
from .catalog import default_catalog, entry_by_name
from .dualgroup import (
    parameter_factors_through_iota,
    sl_regular_unipotent_jordan_type,
    sp_embedding_jordan_type,
    steinberg_chi0_distinguished,
    unipotent_criterion,
)
from .generator import random_valid_hypergraph
from .hypergraph import (
    finite_field_pullback,
    full_closed_vertices,
    harmonic_space,
    is_harmonic,
    product,
    quotient_by_automorphisms,
    rational_form_double,
    relabel,
    support_function,
    to_json_dict,
    validate,
    verify_dimension_theorem,
)
from .involution import quasi_split_flag
from .rootsystem import all_characters, chi0_sign, fundamental_group

RANDOM_SEED = 94117
RANDOM_COUNT = 100


class CheckFailure(Exception):
    pass


def _expect(cond, message):
    if not cond:
        raise CheckFailure(message)


def _support_soundness(g, support):
    full = set(support.generators)
    for x in full:
        _expect(support.value(x) == {x: 1}, f"support is not the identity at {x!r}")
    for e in g.edges:
        total: dict = {}
        for v in e.members:
            for s, c in support.value(v).items():
                total[s] = total.get(s, 0) + c
        _expect(all(c == 0 for c in total.values()),
                f"support does not annihilate edge {e.key()}")
    kernel = harmonic_space(g)
    basis_rows = [list(vec) for vec in kernel.basis]
    for x in support.generators:
        coord = support.coordinate(x)
        _expect(is_harmonic(g, coord), f"coordinate functional at {x!r} is not harmonic")
        vec = [Fraction(coord[v]) for v in g.vertices]
        rows = basis_rows + [vec]
        _expect(linalg.rank(rows) == kernel.dimension,
                f"coordinate functional at {x!r} is outside the harmonic space")


def _subgroup_from_generators(gens):
    if not gens:
        return set()
    elems = {tuple(range(len(gens[0])))}
    elems |= {tuple(g) for g in gens}
    changed = True
    while changed:
        changed = False
        for a in list(elems):
            for b in list(elems):
                c = tuple(a[b[i]] for i in range(len(a)))
                if c not in elems:
                    elems.add(c)
                    changed = True
    return elems


def entry_checks(entry, catalog):
    """Yield (check-name, callable) pairs for one catalog entry."""
    closed = entry.hypergraph_closed
    inv = entry.involution

    def chk_dimension_theorem():
        _expect(verify_dimension_theorem(closed), "dimension theorem fails")

    def chk_support_closed():
        _support_soundness(closed, support_function(closed))

    def chk_quasi_split_equivalence():
        _expect(quasi_split_flag(inv) == (len(full_closed_vertices(closed)) > 0),
                "quasi-split flag disagrees with the full closed count")

    def chk_deciders_agree():
        a = steinberg_chi0_distinguished(inv)
        b = unipotent_criterion(inv)
        c = parameter_factors_through_iota(inv)
        _expect(a == b == c, f"verdicts disagree: orbit={a} unipotent={b} parameter={c}")
        _expect(a == entry.expected["st_chi0_distinguished"], "stored verdict differs")

    def chk_chi0_homomorphism():
        aff = fundamental_group(inv.root_system)
        for g in aff.omega:
            for h in aff.omega:
                _expect(chi0_sign(aff, aff.compose(g, h))
                        == chi0_sign(aff, g) * chi0_sign(aff, h),
                        "sign character is not multiplicative")
        ranges = inv.root_system.cartan.factor_ranges()
        expected_order = 1
        for a, b in ranges:
            block = [[inv.root_system.cartan.cartan[i][j] for j in range(a, b)]
                     for i in range(a, b)]
            expected_order *= int(linalg.det(block))
        _expect(len(aff.omega) == expected_order,
                "length-zero group order differs from the Cartan determinant")

    yield "dimension_theorem", chk_dimension_theorem
    yield "support_closed", chk_support_closed
    yield "quasi_split_equivalence", chk_quasi_split_equivalence
    yield "deciders_agree", chk_deciders_agree
    yield "chi0_homomorphism", chk_chi0_homomorphism

    if entry.hypergraph_rational is not None:
        rational = entry.hypergraph_rational

        def chk_support_rational():
            _support_soundness(rational, support_function(rational))

        def chk_rational_dim_bound():
            _expect(harmonic_space(rational).dimension
                    >= len(full_closed_vertices(rational)),
                    "harmonic dimension below the full closed count")

        yield "support_rational", chk_support_rational
        yield "rational_dim_bound", chk_rational_dim_bound

        if entry.projection is not None:
            def chk_pullback():
                proj = entry.projection_map()
                for phi in harmonic_space(closed).basis_functions():
                    pulled = finite_field_pullback(rational, closed, proj, phi)
                    _expect(is_harmonic(rational, pulled),
                            "pullback of a harmonic function is not harmonic")
            yield "pullback_harmonic", chk_pullback

    if entry.affine is not None:
        aff_data = entry.affine

        def chk_affine_quotients():
            _expect(to_json_dict(gamma0(aff_data.graph))
                    == to_json_dict(aff_data.gamma0_graph), "stored quotient differs")
            _expect(to_json_dict(gamma1(aff_data.graph))
                    == to_json_dict(aff_data.gamma1_graph), "stored unit section differs")

        def chk_affine_support():
            g0 = aff_data.gamma0_graph
            s = affine_support_function(g0)
            _support_soundness(g0, s)
            g1 = aff_data.gamma1_graph
            _support_soundness(g1, affine_support_function(g1))

        def chk_stabilizers_match_omega_h():
            subgroup = _subgroup_from_generators(entry.omega_h)
            for v, elems in aff_data.stabilizers:
                _expect(set(elems) == subgroup or not subgroup,
                        f"stabilizer at {v!r} differs from the stored subgroup")

        def chk_twisted():
            g1 = aff_data.gamma1_graph
            stab = aff_data.stabilizer_map()
            aff_dynkin = fundamental_group(inv.root_system)
            s_nonempty = bool(zero_length_full_vertices(g1))

            def chi_matches_sign(chi, g):
                # chi^{-1} chi_0 is trivial at g iff chi(g) equals the sign
                exp = chi.exponent(g)
                if chi0_sign(aff_dynkin, g) == 1:
                    return exp == 0
                return chi.order % 2 == 0 and exp == chi.order // 2

            for chi in all_characters(aff_dynkin):
                expected = s_nonempty
                if expected:
                    for v, elems in aff_data.stabilizers:
                        for g in elems:
                            if not chi_matches_sign(chi, g):
                                expected = False
                got = twisted_harmonic_exists(g1, list(aff_data.h_action), chi, stab)
                _expect(got == expected,
                        f"twisted existence is {got}, expected {expected}")
                if got:
                    witness = twisted_harmonic_witness(g1, list(aff_data.h_action), chi, stab)
                    _expect(is_harmonic(g1, witness), "twisted witness is not harmonic")
                    _expect(check_twisted_equivariance(
                        g1, close_under_composition(list(aff_data.h_action))
                        if aff_data.h_action else [], chi, witness),
                        "twisted witness is not equivariant")

        yield "affine_quotients", chk_affine_quotients
        yield "affine_support", chk_affine_support
        yield "stabilizers_match_omega_h", chk_stabilizers_match_omega_h
        yield "twisted_existence", chk_twisted

    if entry.derived is not None:
        def chk_provenance():
            op = entry.derived["op"]
            if op == "double":
                base = entry_by_name(entry.derived["of"], catalog)
                regenerated = rational_form_double(base.hypergraph_closed,
                                                   entry.derived["vertex"])
                _expect(to_json_dict(regenerated) == to_json_dict(entry.hypergraph_rational),
                        "stored rational graph differs from the doubling")
            elif op == "quotient":
                base = entry_by_name(entry.derived["of"], catalog)
                regenerated = quotient_by_automorphisms(
                    base.hypergraph_closed, [entry.derived["automorphism"]])
                _expect(to_json_dict(regenerated) == to_json_dict(closed),
                        "stored quotient differs from the fold")
            elif op == "product":
                f1 = entry_by_name(entry.derived["of"][0], catalog)
                f2 = entry_by_name(entry.derived["of"][1], catalog)
                p1, p2 = entry.derived["prefixes"]
                regenerated = product(relabel(f1.hypergraph_closed, p1),
                                      relabel(f2.hypergraph_closed, p2))
                _expect(to_json_dict(regenerated) == to_json_dict(closed),
                        "stored product differs from the factors")
                _expect(harmonic_space(closed).dimension
                        == harmonic_space(f1.hypergraph_closed).dimension
                        * harmonic_space(f2.hypergraph_closed).dimension,
                        "harmonic dimension is not multiplicative")
            else:
                raise CheckFailure(f"unknown provenance op {op!r}")
        yield "provenance", chk_provenance


def global_checks():
    def chk_jordan():
        for n in range(1, 6):
            _expect(sp_embedding_jordan_type(n) == (2 * n, 1),
                    f"embedded partition at n={n} is not (2n, 1)")
            _expect(sl_regular_unipotent_jordan_type(2 * n + 1) == (2 * n + 1,),
                    "full regular partition is not a single block")

    def chk_random_battery():
        rng = random.Random(RANDOM_SEED)
        for _ in range(RANDOM_COUNT):
            g = random_valid_hypergraph(rng)
            validate(g)
            _expect(verify_dimension_theorem(g),
                    "random graph violates the dimension theorem")
            _support_soundness(g, support_function(g))

    yield "jordan_partitions", chk_jordan
    yield "random_battery", chk_random_battery


def run_verifications(catalog=None, emit=None):
    """Run every check; returns (ok, lines)."""
    catalog = catalog if catalog is not None else default_catalog()
    lines = []
    ok = True

    def record(line):
        lines.append(line)
        if emit is not None:
            emit(line)

    for entry in catalog:
        for name, call in entry_checks(entry, catalog):
            try:
                call()
                record(f"ok entry={entry.name} check={name}")
            except CheckFailure as exc:
                ok = False
                record(f"FAIL entry={entry.name} check={name}: {exc}")
    for name, call in global_checks():
        try:
            call()
            record(f"ok check={name}")
        except CheckFailure as exc:
            ok = False
            record(f"FAIL check={name}: {exc}")
    record(("PASS" if ok else "FAIL") + f" checks={len(lines)}")
    return ok, lines

import pytest

from orbitharmonics.errors import ValidationError
from orbitharmonics.rootsystem import (
    all_characters,
    canonical_generators,
    cartan_datum,
    character_from_exponents,
    chi0_character,
    chi0_sign,
    fundamental_group,
    generate_roots,
    perm_sign,
    reflect,
    root_system,
    trivial_character,
    twisted_character_trivial_on,
)

# reflection closure of the G2 Cartan matrix, written out by hand
G2_ROOTS = {
    (1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2),
    (-1, 0), (0, -1), (-1, -1), (-2, -1), (-3, -1), (-3, -2),
}


def test_a1_roots():
    rs = root_system((("A", 1),))
    assert set(rs.roots) == {(1,), (-1,)}


def test_a2_roots():
    rs = root_system((("A", 2),))
    assert len(rs.roots) == 6
    assert rs.highest_roots == ((1, 1),)


def test_g2_roots_match_hand_closure():
    rs = root_system((("G", 2),))
    assert set(rs.roots) == G2_ROOTS
    assert rs.highest_roots == ((3, 2),)


def test_c2_roots():
    rs = root_system((("C", 2),))
    assert len(rs.roots) == 8
    assert rs.highest_roots == ((2, 1),)


@pytest.mark.parametrize("factors", [
    (("A", 1),), (("A", 2),), (("A", 4),), (("C", 2),), (("G", 2),),
    (("A", 1), ("A", 1)), (("A", 2), ("C", 2)),
])
def test_reflection_closure_and_half_positive(factors):
    rs = root_system(factors)
    for beta in rs.roots:
        for i in range(rs.rank):
            assert reflect(rs.cartan, beta, i) in rs._root_set
    assert 2 * len(rs.positives) == len(rs.roots)


def test_bad_cartan_rejected():
    with pytest.raises(ValidationError):
        cartan_datum([("A", 2)], cartan=[[2, 1], [1, 2]])
    with pytest.raises(ValidationError):
        cartan_datum([("A", 2)], cartan=[[2, -1], [0, 2]])
    with pytest.raises(ValidationError):
        cartan_datum([("B", 3)])


def test_non_standard_matrix_rejected():
    with pytest.raises(ValidationError):
        generate_roots(cartan_datum([("A", 2)], cartan=[[2, 0], [0, 2]]))


@pytest.mark.parametrize("factors,order", [
    ((("A", 1),), 2),
    ((("A", 2),), 3),
    ((("A", 4),), 5),
    ((("C", 2),), 2),
    ((("G", 2),), 1),
    ((("A", 1), ("A", 1)), 4),
    ((("A", 2), ("G", 2)), 3),
])
def test_omega_order_equals_cartan_determinant(factors, order):
    aff = fundamental_group(root_system(factors))
    assert len(aff.omega) == order
    for g in aff.omega:
        for h in aff.omega:
            assert aff.compose(g, h) in aff.omega
        assert aff.inverse(g) in aff.omega


def test_chi0_values():
    aff = fundamental_group(root_system((("A", 1),)))
    swap = next(g for g in aff.omega if g != aff.identity)
    assert chi0_sign(aff, aff.identity) == 1
    assert chi0_sign(aff, swap) == -1

    aff2 = fundamental_group(root_system((("A", 2),)))
    assert all(chi0_sign(aff2, g) == 1 for g in aff2.omega)

    affc = fundamental_group(root_system((("C", 2),)))
    flip = next(g for g in affc.omega if g != affc.identity)
    assert chi0_sign(affc, flip) == -1


def test_chi0_rejects_foreign_permutation():
    aff = fundamental_group(root_system((("A", 2),)))
    with pytest.raises(ValidationError):
        chi0_sign(aff, (1, 0, 2))


@pytest.mark.parametrize("factors", [
    (("A", 1),), (("A", 2),), (("A", 4),), (("C", 2),), (("A", 1), ("A", 1)),
])
def test_chi0_homomorphism_exhaustive(factors):
    aff = fundamental_group(root_system(factors))
    for g in aff.omega:
        for h in aff.omega:
            assert chi0_sign(aff, aff.compose(g, h)) == chi0_sign(aff, g) * chi0_sign(aff, h)


def test_character_count_equals_group_order():
    for factors in [(("A", 1),), (("A", 2),), (("A", 4),), (("A", 1), ("A", 1))]:
        aff = fundamental_group(root_system(factors))
        assert len(all_characters(aff)) == len(aff.omega)


def test_character_from_exponents_roundtrip():
    rs = root_system((("A", 2),))
    aff = fundamental_group(rs)
    gens = canonical_generators(aff, rs.cartan)
    assert len(gens) == 1
    chi = character_from_exponents(aff, rs.cartan, [1])
    assert chi.order == 3
    assert chi.exponent(gens[0]) == 1
    assert chi.exponent(aff.identity) == 0


def test_twisted_triviality_helper():
    rs = root_system((("A", 1),))
    aff = fundamental_group(rs)
    swap = next(g for g in aff.omega if g != aff.identity)
    chi0 = chi0_character(aff)
    assert twisted_character_trivial_on(chi0, aff, [swap])
    assert not twisted_character_trivial_on(trivial_character(aff), aff, [swap])


def test_perm_sign():
    assert perm_sign((0, 1, 2)) == 1
    assert perm_sign((1, 0, 2)) == -1
    assert perm_sign((1, 2, 0)) == 1

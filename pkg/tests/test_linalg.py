from fractions import Fraction

from hypothesis import given, strategies as st

from orbitharmonics import linalg

small_ints = st.integers(min_value=-6, max_value=6)


def matrix_strategy(max_dim=5):
    return st.integers(1, max_dim).flatmap(
        lambda n: st.integers(1, max_dim).flatmap(
            lambda m: st.lists(st.lists(small_ints, min_size=m, max_size=m),
                               min_size=n, max_size=n)))


def test_rref_identity():
    red, pivots = linalg.rref([[1, 0], [0, 1]])
    assert pivots == [0, 1]
    assert red == [[1, 0], [0, 1]]


def test_kernel_of_singular_matrix():
    basis = linalg.kernel_basis([[1, 1, 0], [0, 0, 1]], 3)
    assert basis == [(1, -1, 0)]


def test_solve_inconsistent():
    assert linalg.solve([[1, 1], [1, 1]], [1, 2]) is None


def test_solve_underdetermined_sets_free_to_zero():
    sol = linalg.solve([[1, 1]], [3])
    assert sol == [Fraction(3), Fraction(0)]


def test_det_values():
    assert linalg.det([[2, -1], [-1, 2]]) == 3
    assert linalg.det([[2, -1], [-2, 2]]) == 2
    assert linalg.det([[1, 2], [2, 4]]) == 0


@given(matrix_strategy())
def test_kernel_basis_annihilates(rows):
    ncols = len(rows[0])
    basis = linalg.kernel_basis(rows, ncols)
    for vec in basis:
        assert all(sum(r * v for r, v in zip(row, vec)) == 0 for row in rows)
    assert linalg.rank(rows) + len(basis) == ncols


@given(matrix_strategy(4))
def test_rank_bounded(rows):
    r = linalg.rank(rows)
    assert 0 <= r <= min(len(rows), len(rows[0]))


def test_primitive_integer_vector():
    assert linalg.primitive_integer_vector(
        [Fraction(1, 2), Fraction(-1, 3)]) == (3, -2)
    assert linalg.primitive_integer_vector(
        [Fraction(-2), Fraction(4)]) == (1, -2)

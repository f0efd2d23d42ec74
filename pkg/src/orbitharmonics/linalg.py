"""Exact linear algebra over the rationals.

Everything here is deterministic: pivots are chosen as the first nonzero
entry scanning columns left to right and rows top to bottom, so the same
matrix always produces the same echelon form, kernel basis and solution.
All arithmetic uses ``fractions.Fraction``; there is no floating point
anywhere in the package.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Row = list[Fraction]


def _as_fraction_rows(rows: Iterable[Sequence]) -> list[Row]:
    return [[Fraction(x) for x in row] for row in rows]


def rref(rows: Iterable[Sequence]) -> tuple[list[Row], list[int]]:
    """Reduced row echelon form.

    Returns the reduced matrix together with the list of pivot columns.
    """
    m = _as_fraction_rows(rows)
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, len(m)):
            if m[i][c] != 0:
                pr = i
                break
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows: Iterable[Sequence], ncols: int | None = None) -> int:
    m = [list(row) for row in rows]
    if not m:
        return 0
    _, pivots = rref(m)
    return len(pivots)


def primitive_integer_vector(vec: Sequence[Fraction]) -> tuple[int, ...]:
    """Scale a rational vector to a primitive integer vector.

    The first nonzero coordinate is made positive; the zero vector maps to
    itself.
    """
    denom = 1
    for x in vec:
        denom = denom * Fraction(x).denominator // gcd(denom, Fraction(x).denominator)
    ints = [int(Fraction(x) * denom) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g > 1:
        ints = [x // g for x in ints]
    for x in ints:
        if x != 0:
            if x < 0:
                ints = [-y for y in ints]
            break
    return tuple(ints)


def kernel_basis(rows: Iterable[Sequence], ncols: int) -> list[tuple[int, ...]]:
    """Basis of the right kernel, as primitive integer vectors.

    One basis vector per free column, in increasing column order; the free
    coordinate is set to 1 and the pivot coordinates are read off the
    reduced echelon form.
    """
    m = _as_fraction_rows(rows)
    if not m:
        return [primitive_integer_vector([Fraction(int(i == j)) for j in range(ncols)])
                for i in range(ncols)]
    red, pivots = rref(m)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][free]
        basis.append(primitive_integer_vector(v))
    return basis


def solve(rows: Iterable[Sequence], rhs: Sequence) -> list[Fraction] | None:
    """One solution of ``rows @ x = rhs`` with free variables set to 0.

    Returns ``None`` when the system is inconsistent.
    """
    m = _as_fraction_rows(rows)
    b = [Fraction(x) for x in rhs]
    if not m:
        return [] if all(x == 0 for x in b) else None
    ncols = len(m[0])
    aug = [row + [bv] for row, bv in zip(m, b)]
    red, pivots = rref(aug)
    if ncols in pivots:
        return None
    sol = [Fraction(0)] * ncols
    for r, pc in enumerate(pivots):
        sol[pc] = red[r][ncols]
    return sol


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list[Fraction]]:
    n, k = len(a), len(b)
    cols = len(b[0]) if b else 0
    out = [[Fraction(0)] * cols for _ in range(n)]
    for i in range(n):
        for t in range(k):
            x = Fraction(a[i][t])
            if x == 0:
                continue
            for j in range(cols):
                out[i][j] += x * Fraction(b[t][j])
    return out


def mat_vec(a: Sequence[Sequence], v: Sequence) -> list[Fraction]:
    return [sum((Fraction(x) * Fraction(y) for x, y in zip(row, v)), Fraction(0))
            for row in a]


def identity_matrix(n: int) -> list[list[Fraction]]:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def det(rows: Sequence[Sequence]) -> Fraction:
    """Determinant by fraction-based Gaussian elimination."""
    m = _as_fraction_rows(rows)
    n = len(m)
    sign = 1
    d = Fraction(1)
    for c in range(n):
        pr = None
        for i in range(c, n):
            if m[i][c] != 0:
                pr = i
                break
        if pr is None:
            return Fraction(0)
        if pr != c:
            m[c], m[pr] = m[pr], m[c]
            sign = -sign
        d *= m[c][c]
        pv = m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] / pv
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return d * sign

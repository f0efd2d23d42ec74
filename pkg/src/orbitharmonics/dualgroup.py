"""Dual-group side: diagram tests, the unipotent criterion, and the
odd-special-linear exception made concrete.

The parameter-factoring question is never materialized as a homomorphism;
it reduces to whether the embedded unipotent variety meets the open
regular orbit, which for split symmetric pairs is decided by
quasi-splitness together with the absence of an odd-A inner factor.  Three
independently coded routes to this verdict are exposed so they can be
cross-validated against each other and against the orbit side.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import CrossCheckError
from .involution import (
    InvolutionDatum,
    phi_alpha_diagram,
    quasi_split_flag,
    sigma_split_rank_on_factor,
    two_rho_0,
)
from . import linalg


def a2n_exception_factors(inv: InvolutionDatum) -> tuple[int, ...]:
    """Factors of type A with even rank 2n on which the involution is the
    inner quasi-split one (split rank n), the unique obstruction case."""
    out = []
    for k, (kind, r) in enumerate(inv.root_system.cartan.factors):
        if inv.factor_swap[k] != k:
            continue
        if kind != "A" or r % 2 != 0:
            continue
        a, b = inv.root_system.cartan.factor_ranges()[k]
        if any(i in inv.delta0 for i in range(a, b)):
            continue
        if sigma_split_rank_on_factor(inv, k) == r // 2:
            out.append(k)
    return tuple(out)


def _diagram_detects_exception(inv: InvolutionDatum) -> bool:
    """Redundant detection through the local diagrams: any bad row-5 shape."""
    n = inv.rank
    for i in range(n):
        if i in inv.delta0:
            continue
        if phi_alpha_diagram(inv, i).table_row == 5:
            return True
    return False


def unipotent_criterion(inv: InvolutionDatum) -> bool:
    """Whether the embedded unipotent variety meets the open regular orbit.

    Quasi-splitness is read off the weighted sum of fixed simple roots, the
    exception structurally; the local-diagram route is run as a redundant
    cross-check and any disagreement is an internal error.
    """
    qs = all(x == 0 for x in two_rho_0(inv))
    if qs != quasi_split_flag(inv):
        raise CrossCheckError(f"{inv.name}: two formulations of quasi-splitness disagree")
    if not qs:
        return False
    structural = bool(a2n_exception_factors(inv))
    via_diagrams = _diagram_detects_exception(inv)
    if structural != via_diagrams:
        raise CrossCheckError(
            f"{inv.name}: structural odd-A detection ({structural}) disagrees with "
            f"the diagram shapes ({via_diagrams})")
    return not structural


def parameter_factors_through_iota(inv: InvolutionDatum) -> bool:
    """Whether the Steinberg parameter factors through the embedded dual group.

    Decided purely through the local diagrams: the central torus image must
    be trivial (no fixed simple roots) and every local diagram must be one
    of the two good black-node-free shapes.
    """
    if inv.delta0:
        return False
    for i in range(inv.rank):
        row = phi_alpha_diagram(inv, i).table_row
        if row not in (1, 2):
            return False
    return True


def steinberg_chi0_distinguished(inv: InvolutionDatum) -> bool:
    """Orbit-side verdict: quasi-split and no odd-A inner factor."""
    return quasi_split_flag(inv) and not a2n_exception_factors(inv)


# ---------------------------------------------------------------------------
# The odd special linear exception, concretely
# ---------------------------------------------------------------------------

def _nilpotent_exp(x):
    """exp of a nilpotent matrix, exactly."""
    n = len(x)
    out = linalg.identity_matrix(n)
    term = linalg.identity_matrix(n)
    k = 1
    while True:
        term = linalg.mat_mul(term, x)
        if all(all(v == 0 for v in row) for row in term):
            break
        for i in range(n):
            for j in range(n):
                out[i][j] += Fraction(term[i][j], 1) / _factorial(k)
        k += 1
    return out


def _factorial(k: int) -> int:
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


def regular_unipotent_symplectic(n: int) -> list[list[int]]:
    """A regular unipotent element of a rank-n symplectic group, as an
    explicit integer matrix: the single Jordan block of size 2n.

    Verified to preserve a nondegenerate alternating form (an even-size
    Jordan block always does); the form itself is produced by
    `invariant_symplectic_form`.
    """
    m = 2 * n
    u = [[1 if j == i or j == i + 1 else 0 for j in range(m)] for i in range(m)]
    b = invariant_symplectic_form(u)
    ut_b_u = linalg.mat_mul(linalg.mat_mul(_transpose(u), b), u)
    if ut_b_u != b:
        raise CrossCheckError("constructed element does not preserve its alternating form")
    return u


def _transpose(m):
    return [list(col) for col in zip(*m)]


def invariant_symplectic_form(u) -> list[list[Fraction]]:
    """A nondegenerate alternating form preserved by the given matrix.

    Solves the linear system u^t B u = B, B skew, exactly, and picks the
    first kernel-basis combination with nonzero determinant.
    """
    m = len(u)
    vars_ = [(i, j) for i in range(m) for j in range(i + 1, m)]
    index = {v: k for k, v in enumerate(vars_)}

    def b_entry(i, j, coeffs):
        if i == j:
            return Fraction(0)
        if i < j:
            return coeffs[index[(i, j)]]
        return -coeffs[index[(j, i)]]

    rows = []
    for a in range(m):
        for b in range(a + 1, m):
            row = [Fraction(0)] * len(vars_)
            for k, (i, j) in enumerate(vars_):
                # contribution of the skew basis form E_ij - E_ji to (u^t B u - B)[a][b]
                val = (u[i][a] * u[j][b] - u[j][a] * u[i][b]) - (
                    1 if (i, j) == (a, b) else 0)
                row[k] = Fraction(val)
            rows.append(row)
    basis = linalg.kernel_basis(rows, len(vars_))
    candidates = [tuple(Fraction(x) for x in vec) for vec in basis]
    for lam in (1, 2, 3, 5):
        candidates.append(tuple(
            sum(Fraction(lam) ** t * vec[k] for t, vec in enumerate(basis))
            for k in range(len(vars_))))
    for vec in candidates:
        candidate = [[b_entry(i, j, vec) for j in range(m)] for i in range(m)]
        if linalg.det(candidate) != 0:
            return candidate
    raise CrossCheckError("no invariant nondegenerate alternating form found")


def jordan_partition(mat) -> tuple[int, ...]:
    """Jordan partition of a unipotent matrix from ranks of powers of (u - 1)."""
    m = len(mat)
    n_minus_id = [[Fraction(mat[i][j]) - (1 if i == j else 0) for j in range(m)]
                  for i in range(m)]
    ranks = [m]
    power = linalg.identity_matrix(m)
    for _ in range(m + 1):
        power = linalg.mat_mul(power, n_minus_id)
        r = linalg.rank(power)
        ranks.append(r)
        if r == 0:
            break
    else:
        raise ValueError("matrix is not unipotent")
    # number of blocks of size >= k is ranks[k-1] - ranks[k]
    parts = []
    for size in range(len(ranks) - 1, 0, -1):
        count = (ranks[size - 1] - ranks[size]) - (
            (ranks[size] - ranks[size + 1]) if size + 1 < len(ranks) else 0)
        parts.extend([size] * count)
    return tuple(sorted(parts, reverse=True))


def sp_embedding_jordan_type(n: int) -> tuple[int, ...]:
    """Jordan partition of a regular symplectic unipotent inside the odd
    special linear group (direct sum with a one-by-one identity block).

    The result is (2n, 1), never the single full block, which is the
    concrete form of the obstruction in the odd-A inner case.
    """
    if n < 1:
        raise ValueError("n must be positive")
    u = regular_unipotent_symplectic(n)
    m = 2 * n + 1
    big = [[u[i][j] if i < 2 * n and j < 2 * n else (1 if i == j == 2 * n else 0)
            for j in range(m)] for i in range(m)]
    return jordan_partition(big)


def sl_regular_unipotent_jordan_type(m: int) -> tuple[int, ...]:
    """Sanity companion: the full Jordan block of the special linear group."""
    u = [[1 if j == i or j == i + 1 else 0 for j in range(m)] for i in range(m)]
    return jordan_partition(u)

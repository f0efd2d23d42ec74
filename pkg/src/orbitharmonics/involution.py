"""Involutions of the root lattice in standard position.

Standard position means the simple roots were chosen adapted to the
involution: every positive root that is moved goes to a negative root.
All derived data (fixed simple roots, the sum of the fixed simple roots,
the diagram involution, the per-root local diagrams) is computed from the
lattice matrix alone.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InconsistencyError, ValidationError
from .linalg import mat_mul, rank
from .rootsystem import RootSystem, Vector

Matrix = tuple[tuple[int, ...], ...]

FIXED = "fixed"
TYPE1 = "type1"
TYPE2 = "type2"
TYPE3 = "type3"


@dataclass(frozen=True)
class InvolutionDatum:
    name: str
    root_system: RootSystem
    sigma: Matrix
    delta0: tuple[int, ...]
    factor_swap: tuple[int, ...]

    @property
    def rank(self) -> int:
        return self.root_system.rank

    def apply(self, v: Vector) -> Vector:
        n = self.rank
        return tuple(sum(self.sigma[i][j] * v[j] for j in range(n)) for i in range(n))


def validate_involution(rs: RootSystem, sigma, name: str = "") -> InvolutionDatum:
    """Check the involution axioms and derive the fixed simple roots.

    Raises ``ValidationError`` naming the violated axiom and the offending
    root: not-an-involution, not-root-permuting, or not-standard-position.
    """
    n = rs.rank
    mat = tuple(tuple(int(x) for x in row) for row in sigma)
    if len(mat) != n or any(len(row) != n for row in mat):
        raise ValidationError(f"{name}: sigma matrix must be {n}x{n}")
    sq = mat_mul(mat, mat)
    for i in range(n):
        for j in range(n):
            if sq[i][j] != (1 if i == j else 0):
                raise ValidationError(f"{name}: not an involution, sigma^2 != id at ({i},{j})")
    inv = InvolutionDatum(name, rs, mat, (), ())
    for beta in rs.roots:
        if not rs.is_root(inv.apply(beta)):
            raise ValidationError(f"{name}: not root-permuting, sigma({beta}) is not a root")
    for beta in rs.positives:
        img = inv.apply(beta)
        if img != beta and any(x > 0 for x in img):
            raise ValidationError(
                f"{name}: not in standard position, sigma({beta}) = {img} is positive")
    delta0 = tuple(i for i in range(n)
                   if inv.apply(rs.simple(i)) == rs.simple(i))
    swap = _factor_swap(rs, inv)
    return InvolutionDatum(name, rs, mat, delta0, swap)


def _factor_swap(rs: RootSystem, inv: InvolutionDatum) -> tuple[int, ...]:
    ranges = rs.cartan.factor_ranges()
    out = []
    for k, (a, b) in enumerate(ranges):
        images = {rs.factor_of_root(inv.apply(rs.simple(i))) for i in range(a, b)}
        if len(images) != 1:
            raise ValidationError(f"{inv.name}: sigma does not permute the simple factors")
        out.append(images.pop())
    if sorted(out) != list(range(len(ranges))):
        raise ValidationError(f"{inv.name}: factor map is not a permutation")
    return tuple(out)


def classify_simple_roots(inv: InvolutionDatum) -> dict[int, str]:
    """Sort each simple root into fixed / type1 / type2 / type3."""
    rs = inv.root_system
    out = {}
    for i in range(rs.rank):
        alpha = rs.simple(i)
        img = inv.apply(alpha)
        if img == alpha:
            out[i] = FIXED
            continue
        diff = tuple(a - b for a, b in zip(alpha, img))
        if rs.is_root(diff):
            out[i] = TYPE1
        elif all(x % 2 == 0 for x in diff) and rs.is_root(tuple(x // 2 for x in diff)):
            out[i] = TYPE2
        else:
            out[i] = TYPE3
    return out


def quasi_split_flag(inv: InvolutionDatum) -> bool:
    """True when no simple root is fixed."""
    return not inv.delta0


def two_rho_0(inv: InvolutionDatum) -> Vector:
    """Sum of the fixed simple roots as a lattice vector."""
    n = inv.rank
    out = [0] * n
    for i in inv.delta0:
        out[i] += 1
    return tuple(out)


def longest_element_matrix(rs: RootSystem, subset) -> Matrix:
    """Longest element of the reflection subgroup generated by a subset of Delta.

    Greedy right-multiplication: while some generator's simple root is kept
    positive, multiply by that reflection.  Each step raises the length
    inside the finite subsystem, so this terminates at the longest element.
    """
    n = rs.rank
    cart = rs.cartan.cartan
    w = [[1 if r == j else 0 for j in range(n)] for r in range(n)]
    changed = True
    while changed:
        changed = False
        for i in sorted(subset):
            col = [w[r][i] for r in range(n)]  # image of alpha_i
            if any(x > 0 for x in col):
                # w := w * s_i
                for r in range(n):
                    wi = w[r][i]
                    for j in range(n):
                        w[r][j] -= cart[i][j] * wi
                changed = True
                break
    return tuple(tuple(row) for row in w)


def sigma_star(inv: InvolutionDatum) -> tuple[int, ...]:
    """The induced diagram involution on the simple roots.

    Computed as ``alpha -> -sigma(w0_{Delta0}(alpha))`` with the longest
    element of the subsystem spanned by the fixed simple roots; the result
    must be a Dynkin-diagram automorphism squaring to the identity, else
    the input data is inconsistent.
    """
    rs = inv.root_system
    n = rs.rank
    w0 = longest_element_matrix(rs, inv.delta0)
    perm = []
    for i in range(n):
        v = rs.simple(i)
        w = tuple(sum(w0[r][c] * v[c] for c in range(n)) for r in range(n))
        img = tuple(-x for x in inv.apply(w))
        hits = [j for j in range(n) if img == rs.simple(j)]
        if not hits:
            raise InconsistencyError(
                f"{inv.name}: sigma* image of simple root {i} is {img}, not a simple root")
        perm.append(hits[0])
    if sorted(perm) != list(range(n)):
        raise InconsistencyError(f"{inv.name}: sigma* is not a permutation of Delta")
    for i in range(n):
        if perm[perm[i]] != i:
            raise InconsistencyError(f"{inv.name}: sigma* does not square to the identity")
    cart = rs.cartan.cartan
    for i in range(n):
        for j in range(n):
            if cart[perm[i]][perm[j]] != cart[i][j]:
                raise InconsistencyError(f"{inv.name}: sigma* is not a diagram automorphism")
    return tuple(perm)


@dataclass(frozen=True)
class PhiAlphaDiagram:
    """Local diagram attached to a non-fixed simple root.

    ``nodes`` are simple-root indices, ``black`` the fixed ones among them,
    ``arrow`` the restriction of the diagram involution, and ``shape`` one
    of "A1", "A1xA1", "A2" or a fallback descriptor.  ``table_row`` is set
    for the three black-node-free shapes (1, 2 and 5) and None otherwise.
    """

    alpha: int
    nodes: tuple[int, ...]
    black: tuple[int, ...]
    arrow: tuple[tuple[int, int], ...]
    shape: str
    table_row: int | None


def phi_alpha_diagram(inv: InvolutionDatum, i: int) -> PhiAlphaDiagram:
    """Diagram of the rank-one subsystem attached to a non-fixed simple root."""
    if i in inv.delta0:
        raise ValidationError(f"{inv.name}: simple root {i} is fixed; no local diagram")
    rs = inv.root_system
    star = sigma_star(inv)
    span = set(inv.delta0) | {i, star[i]}
    cart = rs.cartan.cartan

    def component(seed: int) -> set[int]:
        comp = {seed}
        frontier = [seed]
        while frontier:
            a = frontier.pop()
            for b in span:
                if b not in comp and cart[a][b] != 0:
                    comp.add(b)
                    frontier.append(b)
        return comp

    nodes = sorted(component(i) | component(star[i]))
    black = tuple(sorted(set(nodes) & set(inv.delta0)))
    arrow = tuple((a, star[a]) for a in nodes if star[a] != a and star[a] in nodes)
    shape = _shape_of(cart, nodes)
    row = None
    if not black:
        if shape == "A1xA1" and star[i] != i:
            row = 1
        elif shape == "A1" and star[i] == i:
            row = 2
        elif shape == "A2" and star[i] != i:
            row = 5
    return PhiAlphaDiagram(i, tuple(nodes), black, arrow, shape, row)


def _shape_of(cart, nodes) -> str:
    if len(nodes) == 1:
        return "A1"
    if len(nodes) == 2:
        a, b = nodes
        if cart[a][b] == 0:
            return "A1xA1"
        if cart[a][b] == -1 and cart[b][a] == -1:
            return "A2"
    bonds = sorted((cart[a][b], cart[b][a]) for a in nodes for b in nodes
                   if a < b and cart[a][b] != 0)
    return f"other(n={len(nodes)},bonds={bonds})"


def sigma_split_rank_on_factor(inv: InvolutionDatum, factor: int) -> int:
    """Dimension of the lattice part on which sigma acts by -1, per factor."""
    a, b = inv.root_system.cartan.factor_ranges()[factor]
    block = [[inv.sigma[i][j] + (1 if i == j else 0) for j in range(a, b)]
             for i in range(a, b)]
    return (b - a) - rank(block)

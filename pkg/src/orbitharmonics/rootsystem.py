"""Root systems, affine Dynkin data and the length-zero group.

Roots live in the root lattice and are stored as integer coefficient
vectors in the simple-root basis; no real coordinates appear.  The Cartan
matrix convention is ``cartan[i][j] = <alpha_j, alpha_i^vee>``, so the
simple reflection ``s_i`` acts on a coefficient vector ``v`` by

    s_i(v) = v - (sum_j cartan[i][j] * v[j]) * alpha_i.

The length-zero group of the extended affine Weyl group is realized as
explicit permutations of the affine diagram nodes (equivalently, of the
vertices of the fundamental alcove), which is exactly the shape needed by
the sign character.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .errors import ValidationError

Vector = tuple[int, ...]
Perm = tuple[int, ...]

SUPPORTED_TYPES = ("A", "C", "G")


def _standard_cartan_block(kind: str, rank: int) -> list[list[int]]:
    if kind == "A":
        if rank < 1:
            raise ValidationError("A-type factor needs rank >= 1")
        m = [[0] * rank for _ in range(rank)]
        for i in range(rank):
            m[i][i] = 2
            if i + 1 < rank:
                m[i][i + 1] = -1
                m[i + 1][i] = -1
        return m
    if kind == "C":
        if rank < 2:
            raise ValidationError("C-type factor needs rank >= 2")
        m = _standard_cartan_block("A", rank)
        # last simple root is the long one
        m[rank - 2][rank - 1] = -2
        return m
    if kind == "G":
        if rank != 2:
            raise ValidationError("G-type factor has rank 2")
        # first simple root short
        return [[2, -3], [-1, 2]]
    raise ValidationError(f"unsupported factor type {kind!r}")


@dataclass(frozen=True)
class CartanDatum:
    """An ordered list of simple factors with its block Cartan matrix."""

    factors: tuple[tuple[str, int], ...]
    cartan: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.cartan)

    def factor_ranges(self) -> list[tuple[int, int]]:
        """Half-open index ranges of the simple roots of each factor."""
        out = []
        start = 0
        for _, r in self.factors:
            out.append((start, start + r))
            start += r
        return out

    def factor_of_index(self, i: int) -> int:
        for k, (a, b) in enumerate(self.factor_ranges()):
            if a <= i < b:
                return k
        raise IndexError(i)


def cartan_datum(factors, cartan=None) -> CartanDatum:
    """Build and validate a Cartan datum.

    When ``cartan`` is omitted the standard block-diagonal matrix for the
    listed factors is used.
    """
    facs = tuple((str(k), int(r)) for k, r in factors)
    for kind, _ in facs:
        if kind not in SUPPORTED_TYPES:
            raise ValidationError(f"unsupported factor type {kind!r}")
    if cartan is None:
        blocks = [_standard_cartan_block(k, r) for k, r in facs]
        n = sum(r for _, r in facs)
        m = [[0] * n for _ in range(n)]
        ofs = 0
        for blk in blocks:
            for i, row in enumerate(blk):
                for j, x in enumerate(row):
                    m[ofs + i][ofs + j] = x
            ofs += len(blk)
        cart = tuple(tuple(row) for row in m)
    else:
        cart = tuple(tuple(int(x) for x in row) for row in cartan)
    datum = CartanDatum(facs, cart)
    _validate_cartan(datum)
    return datum


def _validate_cartan(cd: CartanDatum) -> None:
    n = cd.rank
    if n != sum(r for _, r in cd.factors):
        raise ValidationError("Cartan matrix size does not match factor ranks")
    for i in range(n):
        if len(cd.cartan[i]) != n:
            raise ValidationError("Cartan matrix is not square")
        if cd.cartan[i][i] != 2:
            raise ValidationError(f"diagonal entry ({i},{i}) is not 2")
        for j in range(n):
            if i != j and cd.cartan[i][j] > 0:
                raise ValidationError(f"off-diagonal entry ({i},{j}) is positive")
            if (cd.cartan[i][j] == 0) != (cd.cartan[j][i] == 0):
                raise ValidationError(f"zero pattern not symmetric at ({i},{j})")
    ranges = cd.factor_ranges()
    for (a1, b1), (a2, b2) in itertools.combinations(ranges, 2):
        for i in range(a1, b1):
            for j in range(a2, b2):
                if cd.cartan[i][j] != 0 or cd.cartan[j][i] != 0:
                    raise ValidationError("Cartan matrix is not block-diagonal over factors")
    for (kind, r), (a, b) in zip(cd.factors, ranges):
        std = _standard_cartan_block(kind, r)
        blk = [[cd.cartan[i][j] for j in range(a, b)] for i in range(a, b)]
        if blk != std:
            raise ValidationError(f"factor block {kind}{r} is not the standard Cartan matrix")


def reflect(cd: CartanDatum, v: Vector, i: int) -> Vector:
    pairing = sum(cd.cartan[i][j] * v[j] for j in range(cd.rank))
    out = list(v)
    out[i] -= pairing
    return tuple(out)


@dataclass(frozen=True)
class RootSystem:
    cartan: CartanDatum
    roots: tuple[Vector, ...]
    positives: tuple[Vector, ...]
    highest_roots: tuple[Vector, ...]

    @property
    def rank(self) -> int:
        return self.cartan.rank

    def simple(self, i: int) -> Vector:
        return tuple(int(j == i) for j in range(self.rank))

    def is_root(self, v: Vector) -> bool:
        return tuple(v) in self._root_set

    @property
    def _root_set(self) -> frozenset:
        # cached lazily; frozen dataclass instances carry a __dict__
        cached = self.__dict__.get("_root_set_cache")
        if cached is None:
            cached = frozenset(self.roots)
            self.__dict__["_root_set_cache"] = cached
        return cached

    def factor_of_root(self, v: Vector) -> int:
        support = [i for i, x in enumerate(v) if x != 0]
        factors = {self.cartan.factor_of_index(i) for i in support}
        if len(factors) != 1:
            raise ValidationError(f"vector {v} is not supported on a single factor")
        return factors.pop()


def generate_roots(cd: CartanDatum) -> RootSystem:
    """Close the simple roots under simple reflections.

    Deterministic: the result is sorted lexicographically on coefficient
    vectors.
    """
    frontier = [tuple(int(j == i) for j in range(cd.rank)) for i in range(cd.rank)]
    seen: set[Vector] = set(frontier)
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(cd.rank):
                w = reflect(cd, v, i)
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    roots = tuple(sorted(seen))
    positives = tuple(v for v in roots if _is_positive(v))
    highest = []
    for a, b in cd.factor_ranges():
        factor_pos = [v for v in positives if any(v[i] for i in range(a, b))]
        highest.append(max(factor_pos, key=lambda v: (sum(v), v)))
    return RootSystem(cd, roots, positives, tuple(highest))


def _is_positive(v: Vector) -> bool:
    return all(x >= 0 for x in v) and any(x > 0 for x in v)


# ---------------------------------------------------------------------------
# Affine diagram and the length-zero group
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AffineDynkin:
    """Affine diagram nodes and the length-zero group acting on them.

    Nodes are named ``"<factor>:<i>"`` with ``i = 0`` the affine node and
    ``i = 1..rank`` the simple roots of that factor.  Group elements are
    permutations of the node list, stored as index tuples.
    """

    nodes: tuple[str, ...]
    omega: tuple[Perm, ...]

    @property
    def identity(self) -> Perm:
        return tuple(range(len(self.nodes)))

    def node_index(self, name: str) -> int:
        return self.nodes.index(name)

    def compose(self, g: Perm, h: Perm) -> Perm:
        """g after h."""
        return tuple(g[h[i]] for i in range(len(h)))

    def inverse(self, g: Perm) -> Perm:
        inv = [0] * len(g)
        for i, j in enumerate(g):
            inv[j] = i
        return tuple(inv)

    def order_of(self, g: Perm) -> int:
        e = self.identity
        k = 1
        cur = g
        while cur != e:
            cur = self.compose(cur, g)
            k += 1
        return k

    def node_map(self, g: Perm) -> dict[str, str]:
        return {self.nodes[i]: self.nodes[g[i]] for i in range(len(self.nodes))}


def _factor_omega(kind: str, rank: int) -> list[Perm]:
    """Length-zero group of one simple factor, acting on its rank+1 nodes.

    Node order is the affine node first, then the simple roots in diagram
    order; for type A this traverses the affine cycle.
    """
    n = rank + 1
    if kind == "A":
        rot = tuple((i + 1) % n for i in range(n))
        elems = [tuple(range(n))]
        cur = rot
        while cur != tuple(range(n)):
            elems.append(cur)
            cur = tuple(rot[c] for c in cur)
        return elems
    if kind == "C":
        flip = tuple(n - 1 - i for i in range(n))
        return [tuple(range(n)), flip]
    if kind == "G":
        return [tuple(range(n))]
    raise ValidationError(f"no affine data for factor type {kind!r}")


def fundamental_group(rs: RootSystem) -> AffineDynkin:
    """The group of length-zero elements as affine-diagram permutations.

    Per factor this is the full coweight-modulo-coroot quotient of the
    adjoint form; its order equals the determinant of the factor's Cartan
    block.
    """
    nodes: list[str] = []
    blocks: list[list[Perm]] = []
    for k, (kind, r) in enumerate(rs.cartan.factors):
        nodes.extend(f"{k}:{i}" for i in range(r + 1))
        blocks.append(_factor_omega(kind, r))
    elems: list[Perm] = []
    for combo in itertools.product(*blocks):
        perm: list[int] = []
        ofs = 0
        for blk in combo:
            perm.extend(ofs + j for j in blk)
            ofs += len(blk)
        elems.append(tuple(perm))
    return AffineDynkin(tuple(nodes), tuple(sorted(elems)))


def perm_sign(perm: Perm) -> int:
    seen = [False] * len(perm)
    sign = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def chi0_sign(aff: AffineDynkin, elem: Perm) -> int:
    """Sign of a length-zero element as a permutation of the alcove vertices."""
    if elem not in aff.omega:
        raise ValidationError("element does not belong to the length-zero group")
    return perm_sign(elem)


# ---------------------------------------------------------------------------
# Characters of the length-zero group
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OmegaCharacter:
    """A character with values in the roots of unity of the given order.

    ``values[g]`` is the exponent ``k`` with ``chi(g) = zeta_order^k``.
    """

    order: int
    values: tuple[tuple[Perm, int], ...]

    @property
    def _map(self) -> dict[Perm, int]:
        cached = self.__dict__.get("_map_cache")
        if cached is None:
            cached = dict(self.values)
            self.__dict__["_map_cache"] = cached
        return cached

    def exponent(self, g: Perm) -> int:
        return self._map[g] % self.order if self.order > 1 else 0

    def is_trivial_on(self, elems) -> bool:
        return all(self.exponent(g) == 0 for g in elems)

    def inverse_times(self, other: "OmegaCharacter") -> "OmegaCharacter":
        """The character ``self^{-1} * other`` on the common domain."""
        m = _lcm(self.order, other.order)
        vals = []
        for g, _ in self.values:
            k = (-self.exponent(g) * (m // self.order)
                 + other.exponent(g) * (m // other.order)) % m
            vals.append((g, k))
        return OmegaCharacter(m, tuple(vals))


def _lcm(a: int, b: int) -> int:
    from math import gcd
    return a * b // gcd(a, b)


def trivial_character(aff: AffineDynkin) -> OmegaCharacter:
    return OmegaCharacter(1, tuple((g, 0) for g in aff.omega))


def chi0_character(aff: AffineDynkin) -> OmegaCharacter:
    vals = tuple((g, 0 if chi0_sign(aff, g) == 1 else 1) for g in aff.omega)
    return OmegaCharacter(2, vals)


def all_characters(aff: AffineDynkin) -> list[OmegaCharacter]:
    """Every character of the (small, abelian) length-zero group."""
    elems = list(aff.omega)
    m = 1
    for g in elems:
        m = _lcm(m, aff.order_of(g))
    e = aff.identity
    index = {g: i for i, g in enumerate(elems)}
    out = []
    for assignment in itertools.product(range(m), repeat=len(elems)):
        if assignment[index[e]] != 0:
            continue
        ok = True
        for g in elems:
            for h in elems:
                gh = aff.compose(g, h)
                if (assignment[index[g]] + assignment[index[h]] - assignment[index[gh]]) % m:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(OmegaCharacter(m, tuple(zip(elems, assignment))))
    return out


def twisted_character_trivial_on(chi: OmegaCharacter, aff: AffineDynkin, elems) -> bool:
    """Whether chi^{-1} chi_0 is trivial on the given elements.

    Trivial at g exactly when chi(g) equals the alcove-vertex sign of g.
    """
    for g in elems:
        exp = chi.exponent(g)
        if chi0_sign(aff, g) == 1:
            if exp != 0:
                return False
        elif not (chi.order % 2 == 0 and exp == chi.order // 2):
            return False
    return True


def canonical_generators(aff: AffineDynkin, cd: CartanDatum) -> list[Perm]:
    """One generator per factor with nontrivial length-zero group.

    For type A the single-step rotation of that factor's affine cycle, for
    type C its diagram flip; factors with trivial group are skipped.
    """
    gens = []
    offset = 0
    n_total = len(aff.nodes)
    for kind, r in cd.factors:
        block = _factor_omega(kind, r)
        nontrivial = [g for g in block if g != tuple(range(r + 1))]
        if nontrivial:
            local = (tuple((i + 1) % (r + 1) for i in range(r + 1))
                     if kind == "A" else nontrivial[0])
            perm = list(range(n_total))
            for i in range(r + 1):
                perm[offset + i] = offset + local[i]
            gens.append(tuple(perm))
        offset += r + 1
    return gens


def character_from_exponents(aff: AffineDynkin, cd: CartanDatum, exponents) -> OmegaCharacter:
    """Build a character from exponents on the canonical factor generators."""
    gens = canonical_generators(aff, cd)
    exps = list(exponents)
    if len(exps) != len(gens):
        raise ValidationError(
            f"character needs {len(gens)} exponents, one per nontrivial factor")
    orders = [aff.order_of(g) for g in gens]
    m = 1
    for o in orders:
        m = _lcm(m, o)
    values = {}
    if not gens:
        return trivial_character(aff)
    ranges = [range(o) for o in orders]
    for powers in itertools.product(*ranges):
        elem = aff.identity
        for g, j in zip(gens, powers):
            for _ in range(j):
                elem = aff.compose(g, elem)
        exp = sum(k * j * (m // o) for k, j, o in zip(exps, powers, orders)) % m
        values[elem] = exp
    if sorted(values) != sorted(aff.omega):
        raise ValidationError("canonical generators do not span the length-zero group")
    return OmegaCharacter(m, tuple(sorted(values.items())))


# ---------------------------------------------------------------------------
# JSON serialization
# ---------------------------------------------------------------------------

def cartan_to_json_dict(cd: CartanDatum) -> dict:
    return {"factors": [[k, r] for k, r in cd.factors],
            "cartan": [list(row) for row in cd.cartan]}


def cartan_from_json_dict(data: dict) -> CartanDatum:
    return cartan_datum(data["factors"], cartan=data.get("cartan"))


def root_system_to_json_dict(rs: RootSystem) -> dict:
    out = cartan_to_json_dict(rs.cartan)
    out["roots"] = [list(v) for v in rs.roots]
    return out


def root_system_from_json_dict(data: dict) -> RootSystem:
    rs = generate_roots(cartan_from_json_dict(data))
    if "roots" in data:
        stored = {tuple(v) for v in data["roots"]}
        if stored != set(rs.roots):
            raise ValidationError("stored root set differs from the reflection closure")
    return rs


@lru_cache(maxsize=None)
def root_system(factors: tuple[tuple[str, int], ...]) -> RootSystem:
    """Convenience cache for standard root systems."""
    return generate_roots(cartan_datum(factors))

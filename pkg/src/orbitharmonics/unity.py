"""Exact arithmetic with roots of unity of prime order.

Values live in the group ring Q[Z/m] represented as coefficient vectors;
for m prime (or 1) an element maps to zero in Q(zeta_m) exactly when all
its coefficients are equal, which gives an exact zero test without
cyclotomic polynomial arithmetic.  This covers every length-zero group in
the catalog (orders 1, 2, 3 and 5).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class Cyc:
    """An element of Q(zeta_order), order prime or 1."""

    order: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.order != 1 and not _is_prime(self.order):
            raise NotImplementedError(
                f"roots of unity of composite order {self.order} are not supported")
        if len(self.coeffs) != self.order:
            raise ValueError("coefficient vector length must equal the order")

    @staticmethod
    def zero(order: int = 1) -> "Cyc":
        return Cyc(order, tuple(Fraction(0) for _ in range(order)))

    @staticmethod
    def rational(x, order: int = 1) -> "Cyc":
        c = [Fraction(0)] * order
        c[0] = Fraction(x)
        return Cyc(order, tuple(c))

    @staticmethod
    def zeta_power(order: int, k: int) -> "Cyc":
        c = [Fraction(0)] * order
        c[k % order] = Fraction(1)
        return Cyc(order, tuple(c))

    def _lift(self, order: int) -> "Cyc":
        if self.order == order:
            return self
        if self.order == 1:
            return Cyc.rational(self.coeffs[0], order)
        raise NotImplementedError(
            f"cannot mix roots of unity of orders {self.order} and {order}")

    def _pair(self, other):
        if isinstance(other, Cyc):
            m = max(self.order, other.order)
            return self._lift(m), other._lift(m)
        return self, Cyc.rational(other, self.order)

    def __add__(self, other) -> "Cyc":
        a, b = self._pair(other)
        return Cyc(a.order, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "Cyc":
        return Cyc(self.order, tuple(-x for x in self.coeffs))

    def __sub__(self, other) -> "Cyc":
        return self + (-other if isinstance(other, Cyc) else Cyc.rational(-Fraction(other)))

    def __mul__(self, other) -> "Cyc":
        if isinstance(other, Cyc):
            a, b = self._pair(other)
            out = [Fraction(0)] * a.order
            for i, x in enumerate(a.coeffs):
                if x == 0:
                    continue
                for j, y in enumerate(b.coeffs):
                    if y != 0:
                        out[(i + j) % a.order] += x * y
            return Cyc(a.order, tuple(out))
        return Cyc(self.order, tuple(x * Fraction(other) for x in self.coeffs))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        if self.order == 1:
            return self.coeffs[0] == 0
        first = self.coeffs[0]
        return all(c == first for c in self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Cyc):
            return (self - other).is_zero()
        return (self - Cyc.rational(other, self.order)).is_zero()

    def __hash__(self):
        raise TypeError("Cyc values are not hashable")

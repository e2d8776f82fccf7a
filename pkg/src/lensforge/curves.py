"""Integer homology classes of closed curves on the Heegaard torus.

Classes are written in the ordered basis (m2, l2) of the torus oriented as
the boundary of the second solid torus, so that m2 . l2 = +1.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd


@dataclass(frozen=True)
class TorusCurve:
    """The class ``coeff_m2 * m2 + coeff_l2 * l2``."""

    coeff_m2: int
    coeff_l2: int

    def __add__(self, other: TorusCurve) -> TorusCurve:
        if not isinstance(other, TorusCurve):
            return NotImplemented
        return TorusCurve(self.coeff_m2 + other.coeff_m2,
                          self.coeff_l2 + other.coeff_l2)

    def __neg__(self) -> TorusCurve:
        return TorusCurve(-self.coeff_m2, -self.coeff_l2)

    def __sub__(self, other: TorusCurve) -> TorusCurve:
        return self + (-other)

    def __rmul__(self, k: int) -> TorusCurve:
        if not isinstance(k, int):
            return NotImplemented
        return TorusCurve(k * self.coeff_m2, k * self.coeff_l2)

    @property
    def is_primitive(self) -> bool:
        return gcd(self.coeff_m2, self.coeff_l2) == 1

    def as_list(self) -> list[int]:
        return [self.coeff_m2, self.coeff_l2]

    def __str__(self) -> str:
        return f"{self.coeff_m2}*m2 + {self.coeff_l2}*l2"


M2 = TorusCurve(1, 0)
L2 = TorusCurve(0, 1)


def intersection(c1: TorusCurve, c2: TorusCurve) -> int:
    """Signed algebraic intersection number ``c1 . c2``.

    Determinant pairing in the basis (m2, l2); bilinear, antisymmetric and
    normalized by ``intersection(M2, L2) == 1``.
    """
    return c1.coeff_m2 * c2.coeff_l2 - c1.coeff_l2 * c2.coeff_m2

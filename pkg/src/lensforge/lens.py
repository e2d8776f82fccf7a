"""Names of lens spaces and their orientation-preserving classification.

L(n, q) is the closed 3-manifold obtained by gluing two solid tori so that
the meridian m1 of the first is the curve ``n*l2 - q*m2`` on the boundary of
the second. Canonical names:

* ``L(0, 1)`` is S^1 x S^2 (m1 = m2),
* ``L(1, 0)`` is S^3 (m1 = l2),
* otherwise ``n >= 2``, ``1 <= q < n`` and ``gcd(n, q) == 1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .curves import TorusCurve
from .errors import InvalidInput, NonManifoldInput, NonPrimitiveCurve, NotInvertible


@dataclass(frozen=True, order=True)
class LensSpace:
    n: int
    q: int

    def __post_init__(self):
        n, q = self.n, self.q
        if n == 0:
            ok = q == 1
        elif n == 1:
            ok = q == 0
        else:
            ok = n >= 2 and 1 <= q < n and gcd(n, q) == 1
        if not ok:
            raise InvalidInput(f"L({n},{q}) is not a canonical lens space name; "
                               "use normalize_lens")

    @property
    def is_sphere(self) -> bool:
        return self.n == 1

    @property
    def is_s1_x_s2(self) -> bool:
        return self.n == 0

    def describe(self) -> str:
        if self.is_sphere:
            return "S^3"
        if self.is_s1_x_s2:
            return "S^1 x S^2"
        return str(self)

    def to_json(self) -> dict:
        return {"n": self.n, "q": self.q}

    def __str__(self) -> str:
        return f"L({self.n},{self.q})"


S3 = LensSpace(1, 0)
S1_X_S2 = LensSpace(0, 1)


def normalize_lens(n: int, q: int) -> LensSpace:
    """Canonical name for the lens space built from ``m1 = n*l2 - q*m2``.

    Negative ``n`` is replaced by ``|n|`` (the CLI flags this as an
    orientation reversal). ``q`` is reduced into ``[0, |n|)``.
    """
    if n == 0 and q == 0:
        raise InvalidInput("n = 0 and q = 0 do not describe a curve")
    n = abs(n)
    if n == 0:
        # m1 = -q*m2 must be simple, hence q = +-1
        if abs(q) != 1:
            raise NonManifoldInput(f"gcd(0,{q}) = {abs(q)} != 1: curve is not simple")
        return S1_X_S2
    if n == 1:
        return S3
    if gcd(n, q) != 1:
        raise NonManifoldInput(f"gcd({n},{q}) = {gcd(n, q)} != 1: curve is not simple")
    return LensSpace(n, q % n)


def mod_inverse(q: int, n: int) -> int:
    """The unique ``q'`` in ``[1, n)`` with ``q*q' = 1 (mod n)``."""
    if n < 2:
        raise InvalidInput(f"modulus must be >= 2, got {n}")
    if gcd(q, n) != 1:
        raise NotInvertible(f"{q} is not invertible modulo {n}")
    return pow(q, -1, n)


def is_homeomorphic(first: LensSpace, second: LensSpace) -> bool:
    """Orientation-preserving homeomorphism test: same n and q' in {q, 1/q mod n}."""
    if first.n != second.n:
        return False
    if first.n < 2:
        return first == second
    return second.q == first.q or second.q == mod_inverse(first.q, first.n)


def homeomorphism_class(lens: LensSpace) -> tuple[int, ...]:
    """Sorted tuple of the q values naming spaces homeomorphic to ``lens``."""
    if lens.n < 2:
        return (lens.q,)
    return tuple(sorted({lens.q, mod_inverse(lens.q, lens.n)}))


def dehn_fill(m1: TorusCurve) -> LensSpace:
    """Lens space obtained by filling along the curve ``m1``.

    ``m1 = beta*m2 + alpha*l2`` must be primitive. The filling only depends
    on the unoriented curve, so ``m1`` and ``-m1`` give the same space.
    """
    if not m1.is_primitive:
        raise NonPrimitiveCurve(f"{m1} is not primitive")
    beta, alpha = m1.coeff_m2, m1.coeff_l2
    if alpha < 0:
        alpha, beta = -alpha, -beta
    if alpha == 0:
        return S1_X_S2
    return normalize_lens(alpha, -beta)

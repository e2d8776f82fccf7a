"""Ramified covers of S^3 branched over the Hopf link, seen on the Heegaard torus.

A finite morphism with discriminant {uv = 0} restricts on links to a
ramified cover of L^3 = (S x D) u (D x S) branched along the Hopf link
K = (S x {0}) u ({0} x S). On the Heegaard torus of the source lens space
L(n, q) it induces a map of fundamental groups whose matrix, from the basis
(m2, l2) to the basis (e1, e2), is ``[[a*n, a*q], [0, b]]`` where a and b
are the degrees on the two branch cores.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .curves import L2, M2, TorusCurve, intersection
from .errors import Degenerate, InvalidDegree, InvalidInput, MalformedMatrix, NonManifoldInput
from .lens import LensSpace, dehn_fill, mod_inverse, normalize_lens

__all__ = [
    "TorusCurve", "M2", "L2", "intersection", "HopfModel", "CoveringData",
    "CoveringMatrix", "covering_matrix", "decompose_matrix", "generic_degree",
    "swap_coordinates", "covering_equivalent", "LinkTrace", "trace_link_of_X",
    "link_of_X", "is_normal_X", "smooth_discriminant_model",
]


class HopfModel:
    """Fixed combinatorial model of the target of the covers.

    ``e1`` is the class of {0} x S and ``e2`` the class of S x {0} in
    pi_1(S x S); the branch components are ordered u-axis first.
    """

    ambient = "L^3 = (S x D) u (D x S)"
    link_components = ("S x {0}", "{0} x S")
    basis = ("e1", "e2")
    source_basis = ("m2", "l2")
    discriminant = "uv = 0"

    @classmethod
    def to_json(cls) -> dict:
        return {
            "ambient": cls.ambient,
            "link_components": list(cls.link_components),
            "source_basis": list(cls.source_basis),
            "target_basis": list(cls.basis),
            "discriminant": cls.discriminant,
        }


def _check_germ_pair(n: int, q: int) -> None:
    if gcd(n, q) != 1:
        raise NonManifoldInput(f"gcd({n},{q}) = {gcd(n, q)} != 1")
    if not 0 < q < n:
        raise InvalidInput(f"need 0 < q < n, got n={n}, q={q}")


@dataclass(frozen=True)
class CoveringData:
    """Lens space (n, q) of the source and degrees a, b on the cores K1, K2."""

    n: int
    q: int
    a: int
    b: int

    def __post_init__(self):
        if self.n < 1:
            raise InvalidInput(f"n must be >= 1, got {self.n}")
        if not 0 <= self.q < self.n:
            raise InvalidInput(f"need 0 <= q < n, got n={self.n}, q={self.q}")
        if gcd(self.n, self.q) != 1:
            raise NonManifoldInput(f"gcd({self.n},{self.q}) != 1")
        if self.a < 1 or self.b < 1:
            raise InvalidDegree(f"degrees must be >= 1, got a={self.a}, b={self.b}")

    @property
    def lens(self) -> LensSpace:
        return LensSpace(self.n, self.q)

    def to_json(self) -> dict:
        return {"n": self.n, "q": self.q, "a": self.a, "b": self.b}


@dataclass(frozen=True)
class CoveringMatrix:
    """Upper triangular matrix of the induced map, bases (m2, l2) -> (e1, e2)."""

    entries: tuple[tuple[int, int], tuple[int, int]]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.entries)
        if len(rows) != 2 or any(len(r) != 2 for r in rows):
            raise MalformedMatrix("covering matrix must be 2x2")
        object.__setattr__(self, "entries", rows)
        (p, r), (s, t) = rows
        if s != 0:
            raise MalformedMatrix("covering matrix must be upper triangular")
        if p <= 0 or t <= 0:
            raise MalformedMatrix("covering matrix needs a positive diagonal")
        if r < 0:
            raise MalformedMatrix("entry (1,2) must be nonnegative")

    @classmethod
    def from_rows(cls, rows) -> CoveringMatrix:
        return cls(tuple(tuple(row) for row in rows))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i - 1][j - 1]

    @property
    def det(self) -> int:
        (p, r), (s, t) = self.entries
        return p * t - r * s

    def image(self, c: TorusCurve) -> tuple[int, int]:
        """Coordinates in (e1, e2) of the image of a torus class."""
        (p, r), (s, t) = self.entries
        # columns are the images of m2 and l2
        return (p * c.coeff_m2 + r * c.coeff_l2, s * c.coeff_m2 + t * c.coeff_l2)

    def as_lists(self) -> list[list[int]]:
        return [list(row) for row in self.entries]


def covering_matrix(d: CoveringData) -> CoveringMatrix:
    return CoveringMatrix(((d.a * d.n, d.a * d.q), (0, d.b)))


def decompose_matrix(m: CoveringMatrix) -> CoveringData:
    """Recover (n, q, a, b): a is the gcd of the first row, b the corner entry.

    A zero (1,2) entry can only come from the S^3 case, so it is read as
    n = 1, q = 0, a = entry (1,1).
    """
    p, r = m[1, 1], m[1, 2]
    if r == 0:
        a, n, q = p, 1, 0
    else:
        a = gcd(p, r)
        n, q = p // a, r // a
    if not 0 <= q < n:
        raise MalformedMatrix(f"recovered q={q} is not in [0, {n})")
    # gcd(n, q) = 1 holds by construction once a is the row gcd
    return CoveringData(n, q, a, m[2, 2])


def generic_degree(d: CoveringData) -> int:
    return d.a * d.b * d.n


def _swap(d: CoveringData) -> CoveringData:
    if d.n == 1:
        return CoveringData(1, 0, d.b, d.a)
    return CoveringData(d.n, mod_inverse(d.q, d.n), d.b, d.a)


def swap_coordinates(d: CoveringData) -> CoveringData:
    """Data for the other ordering of the coordinates of C^2.

    The two solid tori trade places, so q becomes its inverse mod n and the
    core degrees are exchanged.
    """
    if d.n <= 1:
        raise Degenerate(f"swap is degenerate for n={d.n}; it would give "
                         f"(n, q, b, a) = ({d.n}, {d.q}, {d.b}, {d.a})")
    return _swap(d)


def covering_equivalent(d1: CoveringData, d2: CoveringData) -> bool:
    """Same cover up to homeomorphism over L^3, allowing reordering of coordinates."""
    return d1 == d2 or d1 == _swap(d2)


@dataclass(frozen=True)
class LinkTrace:
    """Step-by-step record of the link computation for X_{n,q}."""

    n: int
    q: int
    m2_cap_m1: int
    m1_cap_l2: int
    alpha: int
    beta: int
    m1: TorusCurve
    l2_prime: TorusCurve
    m1_rebased: TorusCurve
    result: LensSpace
    covering: CoveringData

    def to_json(self) -> dict:
        return {
            "m2_cap_m1": self.m2_cap_m1,
            "m1_cap_l2": self.m1_cap_l2,
            "alpha": self.alpha,
            "beta": self.beta,
            "reparam": {
                "m1": self.m1.as_list(),
                "l2_prime": self.l2_prime.as_list(),
                "m1_in_m2_l2_prime": self.m1_rebased.as_list(),
            },
            "result": self.result.to_json(),
        }


def trace_link_of_X(n: int, q: int) -> LinkTrace:
    """Link of X_{n,q} = {z^n = x y^(n-q)} via its projection to (x, y).

    The meridian discs of the two solid tori meet n times, and the level curve
    l2 = {z = c} meets m1 in n - q points (the exponent of y). Solving
    m1 = alpha*l2 + beta*m2 against the intersection pairing and rebasing to
    the parallel l2' = l2 + m2 gives m1 = n*l2' - q*m2.
    """
    _check_germ_pair(n, q)
    m2_cap_m1 = n
    m1_cap_l2 = n - q
    # m2 . l2 = 1 and m2 . m2 = 0 read the l2-coefficient; (. l2) reads the m2-coefficient
    alpha = m2_cap_m1
    beta = m1_cap_l2
    m1 = alpha * L2 + beta * M2
    assert intersection(M2, m1) == m2_cap_m1
    assert intersection(m1, L2) == m1_cap_l2

    l2_prime = L2 + M2
    assert intersection(M2, l2_prime) == 1
    # coordinates of m1 in the basis (m2, l2'): m1 = alpha*l2' + (beta - alpha)*m2
    m1_rebased = TorusCurve(beta - alpha, alpha)
    assert m1_rebased.coeff_m2 * M2 + m1_rebased.coeff_l2 * l2_prime == m1
    assert m1_rebased == TorusCurve(-q, n)

    result = dehn_fill(m1_rebased)
    assert result == normalize_lens(n, q)
    return LinkTrace(n, q, m2_cap_m1, m1_cap_l2, alpha, beta, m1, l2_prime,
                     m1_rebased, result, CoveringData(n, q, 1, 1))


def link_of_X(n: int, q: int) -> tuple[LensSpace, CoveringData]:
    t = trace_link_of_X(n, q)
    return t.result, t.covering


def is_normal_X(n: int, q: int) -> bool:
    """X_{n,q} is normal exactly when its origin is an isolated singularity, q = n - 1."""
    _check_germ_pair(n, q)
    return q == n - 1


def smooth_discriminant_model(n: int) -> CoveringData:
    """Normal form of a degree-n cover with smooth discriminant: (x, y) -> (x, y^n).

    The link is S^3, one sheet over the branch axis and degree n on the other core.
    """
    if n < 1:
        raise InvalidDegree(f"generic degree must be >= 1, got {n}")
    return CoveringData(1, 0, 1, n)


"""The cyclic quotient C_{n,q} = C^2 / G_n with sigma . (z1, z2) = (sigma^q z1, sigma z2).

Its invariant monomials z1^e1 z2^e2 are those with ``n | q*e1 + e2``. The
morphism chain

    C^2 --gamma--> C_{n,q} --nu--> X_{n,q} --pi--> C^2,
    nu(z1, z2) = (z1^n, z2^n, z1 z2^(n-q)),  pi(x, y, z) = (x, y)

is evaluated on exact points of (C*)^2, so identities are checked with zero
tolerance.
"""
from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd

from .errors import BoundTooSmall, InvalidInput, NonManifoldInput, NotApplicable
from .lens import LensSpace
from .torus_cover import CoveringData, CoveringMatrix, covering_matrix


@dataclass(frozen=True)
class QuotientGerm:
    n: int
    q: int

    def __post_init__(self):
        if self.n < 2:
            raise InvalidInput(f"C_(n,q) needs n >= 2, got {self.n}")
        if gcd(self.n, self.q) != 1:
            raise NonManifoldInput(f"gcd({self.n},{self.q}) != 1")
        if not 1 <= self.q < self.n:
            raise InvalidInput(f"need 1 <= q < n, got q={self.q}")

    def __str__(self) -> str:
        return f"C_({self.n},{self.q})"


@dataclass(frozen=True, order=True)
class MonomialExponent:
    """Exponent (e1, e2) of the monomial z1^e1 z2^e2."""

    e1: int
    e2: int

    def __post_init__(self):
        if self.e1 < 0 or self.e2 < 0:
            raise InvalidInput(f"exponents must be nonnegative: ({self.e1}, {self.e2})")

    def __add__(self, other: MonomialExponent) -> MonomialExponent:
        return MonomialExponent(self.e1 + other.e1, self.e2 + other.e2)

    @property
    def is_zero(self) -> bool:
        return self.e1 == 0 and self.e2 == 0

    def as_list(self) -> list[int]:
        return [self.e1, self.e2]


def is_invariant(g: QuotientGerm, m: MonomialExponent) -> bool:
    return (g.q * m.e1 + m.e2) % g.n == 0


@dataclass(frozen=True)
class SemigroupBasis:
    germ: QuotientGerm
    generators: tuple[MonomialExponent, ...]

    def __len__(self) -> int:
        return len(self.generators)

    def express(self, m: MonomialExponent) -> tuple[int, ...] | None:
        """Multiplicities writing ``m`` over the generators, or None.

        Bounded depth-first search: every generator is nonzero, so the search
        tree below ``m`` is finite.
        """
        gens = self.generators
        memo: dict[tuple[int, int, int], tuple[int, ...] | None] = {}

        def search(e1: int, e2: int, start: int):
            if e1 == 0 and e2 == 0:
                return (0,) * len(gens)
            key = (e1, e2, start)
            if key in memo:
                return memo[key]
            found = None
            for i in range(start, len(gens)):
                g = gens[i]
                if g.e1 <= e1 and g.e2 <= e2:
                    rest = search(e1 - g.e1, e2 - g.e2, i)
                    if rest is not None:
                        found = rest[:i] + (rest[i] + 1,) + rest[i + 1:]
                        break
            memo[key] = found
            return found

        return search(m.e1, m.e2, 0)

    def to_json(self) -> dict:
        return {
            "n": self.germ.n,
            "q": self.germ.q,
            "generators": [g.as_list() for g in self.generators],
        }


def invariant_exponents(g: QuotientGerm, bound: int) -> list[MonomialExponent]:
    """Nonzero invariant exponents with total degree at most ``bound``."""
    out = []
    for e1 in range(bound + 1):
        for e2 in range(bound - e1 + 1):
            if (e1 or e2) and (g.q * e1 + e2) % g.n == 0:
                out.append(MonomialExponent(e1, e2))
    return out


def hilbert_basis(g: QuotientGerm, bound: int | None = None) -> SemigroupBasis:
    """Minimal generating set of {(e1, e2) : n | q*e1 + e2}.

    A minimal generator has e1 <= n and e2 <= n, since otherwise (n, 0) or
    (0, n) splits off, so total degree ``2n`` is a complete search bound.
    An exponent is discarded when it is the sum of two nonzero invariant
    exponents.
    """
    if bound is None:
        bound = 2 * g.n
    if bound < 2 * g.n:
        raise BoundTooSmall(f"bound {bound} < 2n = {2 * g.n}")
    elems = invariant_exponents(g, bound)
    keys = {(m.e1, m.e2) for m in elems}
    minimal = []
    for m in elems:
        decomposable = any(
            (m.e1 - t.e1, m.e2 - t.e2) in keys
            for t in elems
            if t.e1 <= m.e1 and t.e2 <= m.e2 and t != m
        )
        if not decomposable:
            minimal.append(m)
    return SemigroupBasis(g, tuple(sorted(minimal)))


def nu_components(g: QuotientGerm) -> list[MonomialExponent]:
    """Exponents of the three coordinates of nu: z1^n, z2^n, z1 z2^(n-q)."""
    return [MonomialExponent(g.n, 0), MonomialExponent(0, g.n), MonomialExponent(1, g.n - g.q)]


@dataclass(frozen=True)
class ExactScalar:
    """Nonzero complex number ``modulus * exp(2*pi*i*phase)`` with rational data."""

    modulus: Fraction
    phase: Fraction

    def __post_init__(self):
        modulus = Fraction(self.modulus)
        if modulus <= 0:
            raise InvalidInput(f"modulus must be positive, got {modulus}")
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "phase", Fraction(self.phase) % 1)

    def __mul__(self, other: ExactScalar) -> ExactScalar:
        if not isinstance(other, ExactScalar):
            return NotImplemented
        return ExactScalar(self.modulus * other.modulus, self.phase + other.phase)

    def __pow__(self, k: int) -> ExactScalar:
        return ExactScalar(self.modulus ** k, self.phase * k)

    def rotate(self, turns: Fraction) -> ExactScalar:
        return ExactScalar(self.modulus, self.phase + turns)

    def to_json(self) -> dict:
        return {"modulus": rational_str(self.modulus), "phase": rational_str(self.phase)}


ONE = ExactScalar(Fraction(1), Fraction(0))


@dataclass(frozen=True)
class ExactPoint:
    """A point (z1, z2) of (C*)^2."""

    z1: ExactScalar
    z2: ExactScalar

    @classmethod
    def of(cls, mod1, phase1, mod2, phase2) -> ExactPoint:
        return cls(ExactScalar(Fraction(mod1), Fraction(phase1)),
                   ExactScalar(Fraction(mod2), Fraction(phase2)))

    def to_json(self) -> dict:
        return {"z1": self.z1.to_json(), "z2": self.z2.to_json()}


def rational_str(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def act(g: QuotientGerm, k: int, p: ExactPoint) -> ExactPoint:
    """sigma^k . p for sigma = exp(2*pi*i/n)."""
    return ExactPoint(p.z1.rotate(Fraction(g.q * k, g.n)), p.z2.rotate(Fraction(k, g.n)))


def eval_monomial(m: MonomialExponent, p: ExactPoint) -> ExactScalar:
    return ExactScalar(p.z1.modulus ** m.e1 * p.z2.modulus ** m.e2,
                       m.e1 * p.z1.phase + m.e2 * p.z2.phase)


def nu(g: QuotientGerm, p: ExactPoint) -> tuple[ExactScalar, ExactScalar, ExactScalar]:
    x, y, z = (eval_monomial(m, p) for m in nu_components(g))
    return x, y, z


def chain_identity_check(g: QuotientGerm, p: ExactPoint) -> bool:
    """Exact check that pi(nu(gamma(p))) == (z1^n, z2^n)."""
    x, y, _ = nu(g, p)
    return (x, y) == (p.z1 ** g.n, p.z2 ** g.n)


def nu_orbit_invariance(g: QuotientGerm, p: ExactPoint) -> bool:
    """nu takes the same value on every point of the G_n-orbit of p."""
    value = nu(g, p)
    return all(nu(g, act(g, k, p)) == value for k in range(g.n))


def random_exact_point(rng: random.Random, max_num: int = 20) -> ExactPoint:
    def scalar():
        modulus = Fraction(rng.randint(1, max_num), rng.randint(1, max_num))
        phase = Fraction(rng.randint(0, max_num - 1), rng.randint(1, max_num))
        return ExactScalar(modulus, phase)
    return ExactPoint(scalar(), scalar())


def _phase_orbits(g: QuotientGerm, denominator: int) -> list[list[tuple[int, int]]]:
    if denominator % g.n:
        raise InvalidInput(f"phase denominator {denominator} must be a multiple of n={g.n}")
    step = denominator // g.n
    seen = set()
    orbits = []
    for start in product(range(denominator), repeat=2):
        if start in seen:
            continue
        i, j = start
        orbit = []
        for k in range(g.n):
            pt = ((i + g.q * step * k) % denominator, (j + step * k) % denominator)
            if pt not in seen:
                seen.add(pt)
                orbit.append(pt)
        orbits.append(orbit)
    return orbits


def orbit_size_census(g: QuotientGerm, denominator: int | None = None) -> dict[int, int]:
    """Orbit-size histogram of G_n acting on phase classes (Z/N)^2.

    Phases are i/N, j/N with N = ``denominator`` (default n); the generator
    shifts them by (q/n, 1/n).
    """
    n_phase = g.n if denominator is None else denominator
    return dict(Counter(len(orbit) for orbit in _phase_orbits(g, n_phase)))


def nu_separates_orbits(g: QuotientGerm, denominator: int | None = None) -> bool:
    """Whether nu is injective on orbits of unit-modulus phase classes (Z/N)^2."""
    n_phase = g.n if denominator is None else denominator
    images = {}
    for orbit in _phase_orbits(g, n_phase):
        values = {nu(g, ExactPoint.of(1, Fraction(i, n_phase), 1, Fraction(j, n_phase)))
                  for i, j in orbit}
        if len(values) != 1:
            return False
        (value,) = values
        if value in images:
            return False
        images[value] = orbit[0]
    return True


def normal_model(lens: LensSpace) -> tuple[QuotientGerm | None, CoveringMatrix]:
    """Normal quasi-ordinary germ with link ``lens`` and its degree-n morphism.

    For n >= 2 this is C_{n,q} with the matrix [[n, q], [0, 1]] (degree one on
    both branch components). For n = 1 the germ is smooth; it is returned as
    ``None`` together with the identity matrix of (C^2, 0).
    """
    if lens.n == 0:
        raise NotApplicable("S^1 x S^2 is not the link of a normal surface germ")
    if lens.n == 1:
        return None, covering_matrix(CoveringData(1, 0, 1, 1))
    return QuotientGerm(lens.n, lens.q), covering_matrix(CoveringData(lens.n, lens.q, 1, 1))

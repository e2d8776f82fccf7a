"""Hirzebruch-Jung continued fractions and resolution chains.

    n/q = a1 - 1/(a2 - 1/(... - 1/ak)),   every ai >= 2.

The chain of rational curves with self-intersections -a1, ..., -ak resolves
the cyclic quotient singularity of type (n, q). Reversing the chain gives
the expansion of n/q' with q*q' = 1 (mod n).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import InvalidInput
from .lens import mod_inverse


@dataclass(frozen=True)
class HJChain:
    n: int
    q: int
    coefficients: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(self.coefficients))
        if any(c < 2 for c in self.coefficients):
            raise InvalidInput(f"coefficients must be >= 2: {self.coefficients}")
        if hj_evaluate(self.coefficients) != Fraction(self.n, self.q):
            raise InvalidInput(f"{list(self.coefficients)} does not evaluate to {self.n}/{self.q}")

    def __len__(self) -> int:
        return len(self.coefficients)


def _check_pair(n: int, q: int) -> None:
    if n < 2 or not 1 <= q < n or gcd(n, q) != 1:
        raise InvalidInput(f"need n >= 2, 1 <= q < n, gcd(n,q) = 1; got ({n},{q})")


def hj_expand(n: int, q: int) -> HJChain:
    """Negative-remainder Euclid: a = ceil(n/q), then continue with q/(a*q - n)."""
    _check_pair(n, q)
    coeffs = []
    num, den = n, q
    while den:
        a = -(-num // den)
        num, den, prev = den, a * den - num, den
        assert 0 <= den < prev, "denominators must strictly decrease"
        coeffs.append(a)
    assert len(coeffs) <= n
    return HJChain(n, q, tuple(coeffs))


def hj_evaluate(coefficients) -> Fraction:
    """Exact value of a1 - 1/(a2 - ... - 1/ak), folded from the tail."""
    coefficients = list(coefficients)
    if not coefficients:
        raise InvalidInput("empty continued fraction")
    if any(c < 2 for c in coefficients):
        raise InvalidInput(f"coefficients must be >= 2: {coefficients}")
    num, den = coefficients[-1], 1
    for a in reversed(coefficients[:-1]):
        # tail value num/den > 1, so the step never divides by zero
        assert num > den > 0
        num, den = a * num - den, num
    return Fraction(num, den)


def hj_reverse_dual(chain: HJChain) -> HJChain:
    reversed_coeffs = tuple(reversed(chain.coefficients))
    q_dual = 1 if chain.n == 1 else mod_inverse(chain.q, chain.n)
    value = hj_evaluate(reversed_coeffs)
    assert value == Fraction(chain.n, q_dual), (value, chain)
    return HJChain(chain.n, q_dual, reversed_coeffs)


@dataclass(frozen=True)
class ResolutionGraph:
    """Linear chain of exceptional curves; vertex i has self-intersection -a_i."""

    self_intersections: tuple[int, ...]

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(i, i + 1) for i in range(len(self.self_intersections) - 1)]

    def intersection_matrix(self) -> list[list[int]]:
        k = len(self.self_intersections)
        mat = [[0] * k for _ in range(k)]
        for i, s in enumerate(self.self_intersections):
            mat[i][i] = s
        for i, j in self.edges:
            mat[i][j] = mat[j][i] = 1
        return mat

    def determinant(self) -> int:
        """Tridiagonal determinant by the continuant recursion."""
        prev, cur = 0, 1
        for s in self.self_intersections:
            prev, cur = cur, s * cur - prev
        return cur

    def to_dot(self) -> str:
        parts = [f'v{i} [label="{s}"];' for i, s in enumerate(self.self_intersections)]
        parts += [f"v{i} -- v{j};" for i, j in self.edges]
        return "graph { " + " ".join(parts) + " }"

    def to_json(self) -> dict:
        return {
            "vertices": [{"id": f"v{i}", "self_intersection": s}
                         for i, s in enumerate(self.self_intersections)],
            "edges": [[f"v{i}", f"v{j}"] for i, j in self.edges],
        }


def resolution_graph(chain: HJChain) -> ResolutionGraph:
    return ResolutionGraph(tuple(-a for a in chain.coefficients))

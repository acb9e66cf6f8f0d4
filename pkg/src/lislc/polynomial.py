"""Dense univariate polynomials with exact integer or rational coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


def _strip(coeffs: Iterable) -> tuple:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class PolySeq:
    """Polynomial in q; ``coefficients[i]`` multiplies ``q**i``."""

    coefficients: tuple

    def __post_init__(self):
        object.__setattr__(self, "coefficients", _strip(self.coefficients))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def coeff(self, i: int):
        return self.coefficients[i] if 0 <= i < len(self.coefficients) else 0

    def __add__(self, other: "PolySeq") -> "PolySeq":
        m = max(len(self.coefficients), len(other.coefficients))
        return PolySeq(tuple(self.coeff(i) + other.coeff(i) for i in range(m)))

    def __neg__(self) -> "PolySeq":
        return PolySeq(tuple(-c for c in self.coefficients))

    def __sub__(self, other: "PolySeq") -> "PolySeq":
        return self + (-other)

    def __mul__(self, other: "PolySeq") -> "PolySeq":
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return PolySeq(())
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return PolySeq(tuple(out))

    def shift(self, m: int = 1) -> "PolySeq":
        """Multiply by ``q**m``."""
        if self.is_zero():
            return self
        return PolySeq((0,) * m + self.coefficients)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for i, c in enumerate(self.coefficients):
            if c:
                terms.append(f"{c}" if i == 0 else f"{c}*q^{i}" if i > 1 else f"{c}*q")
        return " + ".join(terms)


# Rational helpers over plain coefficient lists (low degree first).

def _deriv(f: Sequence[Fraction]) -> list[Fraction]:
    return [i * c for i, c in enumerate(f)][1:]


def _divmod(f: Sequence[Fraction], g: Sequence[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    f = list(f)
    q = [Fraction(0)] * max(len(f) - len(g) + 1, 1)
    lead = g[-1]
    while len(f) >= len(g) and f:
        c = f[-1] / lead
        d = len(f) - len(g)
        q[d] = c
        for i, gc in enumerate(g):
            f[i + d] -= c * gc
        f = list(_strip(f))
    return q, f


def _gcd(f: Sequence[Fraction], g: Sequence[Fraction]) -> list[Fraction]:
    a, b = list(_strip(f)), list(_strip(g))
    while b:
        _, r = _divmod(a, b)
        a, b = b, r
    return [c / a[-1] for c in a]


def squarefree_part(f: Sequence) -> list[Fraction]:
    f = [Fraction(c) for c in _strip(f)]
    if len(f) <= 1:
        return f
    g = _gcd(f, _deriv(f))
    q, r = _divmod(f, g)
    assert not r
    return list(_strip(q))


def sturm_sequence(f: Sequence) -> list[list[Fraction]]:
    """Sturm chain of the squarefree part of ``f``."""
    f0 = squarefree_part(f)
    chain = [f0, list(_strip(_deriv(f0)))]
    while chain[-1]:
        _, r = _divmod(chain[-2], chain[-1])
        chain.append([-c for c in r])
    return chain[:-1]


def _sign_changes(signs: Iterable[int]) -> int:
    s = [x for x in signs if x]
    return sum(1 for a, b in zip(s, s[1:]) if a != b)


def count_distinct_real_roots(f: Sequence) -> int:
    """Number of distinct real roots, via sign variations at +-infinity."""
    chain = sturm_sequence(f)
    at_pos = [(1 if p[-1] > 0 else -1) for p in chain]
    at_neg = [(1 if p[-1] > 0 else -1) * (-1) ** (len(p) - 1) for p in chain]
    return _sign_changes(at_neg) - _sign_changes(at_pos)

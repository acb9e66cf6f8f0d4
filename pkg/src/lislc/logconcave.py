"""Exact log-concavity predicates and certificates for integer sequences.

Sequences are finite lists ``a_1..a_n`` extended by zeros on both sides.  All
comparisons are done in integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .polynomial import PolySeq, count_distinct_real_roots, squarefree_part

DEFAULT_MAX_ITERATIONS = 100


@dataclass(frozen=True)
class Check:
    """Outcome of a pointwise predicate.

    ``index`` is the first failing 1-based position (or power of q for
    polynomial checks).  ``internal_zero`` flags a failure caused by a zero
    entry sitting between two positive neighbours.
    """

    ok: bool
    index: int | None = None
    internal_zero: bool = False

    def __bool__(self) -> bool:
        return self.ok


def _padded(a: Sequence[int]) -> list[int]:
    return [0, *a, 0]


def _failure(p: list[int], k: int) -> Check:
    return Check(False, k, p[k] == 0 and p[k - 1] > 0 and p[k + 1] > 0)


def is_log_concave(a: Sequence[int]) -> Check:
    p = _padded(a)
    for k in range(1, len(p) - 1):
        if p[k - 1] * p[k + 1] > p[k] * p[k]:
            return _failure(p, k)
    return Check(True)


def l_operator(a: Sequence[int]) -> tuple[int, ...]:
    """b_k = a_k^2 - a_{k-1} a_{k+1} with zero boundary terms."""
    p = _padded(a)
    return tuple(p[k] * p[k] - p[k - 1] * p[k + 1] for k in range(1, len(p) - 1))


def r0_holds(square: int, product: int) -> bool:
    """Decide ``square >= r0 * product`` exactly, r0 = (3 + sqrt 5) / 2.

    Requires ``product >= 0``.  With c = 2*square - 3*product the inequality
    reads c >= sqrt(5) * product.
    """
    c = 2 * square - 3 * product
    return c >= 0 and c * c >= 5 * product * product


def is_r0_factor_lc(a: Sequence[int]) -> Check:
    p = _padded(a)
    for k in range(1, len(p) - 1):
        if not r0_holds(p[k] * p[k], p[k - 1] * p[k + 1]):
            return _failure(p, k)
    return Check(True)


class Verdict(str, Enum):
    CERTIFIED = "certified"
    FAILED = "failed"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class CertificateReport:
    """Result of :func:`certify_infinite_lc`.

    ``iteration`` is the number of L-operator applications at which the
    decision was reached (the failing iterate for FAILED, the r0-factor iterate
    for CERTIFIED); ``index`` is the first negative entry for FAILED.
    """

    verdict: Verdict
    iterations: int
    iteration: int | None = None
    index: int | None = None

    @property
    def ok(self) -> bool:
        return self.verdict is Verdict.CERTIFIED

    def __str__(self) -> str:
        if self.verdict is Verdict.CERTIFIED:
            return f"Certified(iteration={self.iteration})"
        if self.verdict is Verdict.FAILED:
            return f"FailedAt(iteration={self.iteration}, index={self.index})"
        return f"Inconclusive(iterations_run={self.iterations})"


def certify_infinite_lc(a: Sequence[int], max_iterations: int = DEFAULT_MAX_ITERATIONS) -> CertificateReport:
    """Try to prove infinite log concavity by iterating the L-operator.

    An r0-factor log-concave nonnegative sequence stays so under L, so the
    first such iterate certifies the input.  A negative entry in some iterate
    refutes it.  Anything else after ``max_iterations`` is inconclusive.
    """
    if any(x < 0 for x in a):
        raise ValueError("input sequence must be nonnegative")
    if max_iterations < 0:
        raise ValueError("max_iterations must be >= 0")
    cur = tuple(a)
    for it in range(max_iterations + 1):
        if it:
            cur = l_operator(cur)
            neg = next((k for k, x in enumerate(cur, start=1) if x < 0), None)
            if neg is not None:
                return CertificateReport(Verdict.FAILED, it, it, neg)
        if is_r0_factor_lc(cur):
            return CertificateReport(Verdict.CERTIFIED, it, it)
    return CertificateReport(Verdict.INCONCLUSIVE, max_iterations)


def q_log_convex_step(f_prev: PolySeq, f: PolySeq, f_next: PolySeq) -> Check:
    """Coefficientwise test of f_prev * f_next >= f**2; index is the first bad power."""
    diff = f_prev * f_next - f * f
    for i, c in enumerate(diff.coefficients):
        if c < 0:
            return Check(False, i)
    return Check(True)


def _lowest_nonzero(f: PolySeq) -> int:
    return next(i for i, c in enumerate(f.coefficients) if c)


def real_root_counts(f: PolySeq) -> tuple[int, int]:
    """(distinct real roots, distinct complex roots) after removing powers of q."""
    if f.is_zero():
        raise ValueError("the zero polynomial has no well-defined roots")
    g = f.coefficients[_lowest_nonzero(f):]
    distinct = len(squarefree_part(g)) - 1
    return count_distinct_real_roots(g), distinct


def real_rooted(f: PolySeq) -> bool:
    """True iff every complex root of ``f`` is real (Sturm sign variations)."""
    real, total = real_root_counts(f)
    return real == total

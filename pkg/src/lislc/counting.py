"""Sequences counting permutations and involutions by longest increasing subsequence.

By Robinson-Schensted, the number of permutations of shape ``lam`` is
``f(lam)**2`` and the number of involutions is ``f(lam)``, so every
shape-restricted count is a sum of hook-formula values grouped by the first
part of the shape.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from math import comb
from typing import Iterable, Iterator, Sequence

from .partitions import Family, partitions_of, num_syt
from .polynomial import PolySeq
from .rsk import is_involution, lis_length

SKEW_MERGED_LIMIT = 11
STATS = ("ell", "inv")


@dataclass(frozen=True)
class CountSequence:
    """Counts indexed by k = 1..n.  ``seq[k]`` uses that 1-based index."""

    n: int
    values: tuple[int, ...]
    family: str = Family.ALL.value
    stat: str = "ell"

    def __post_init__(self):
        if len(self.values) != self.n:
            raise ValueError(f"expected {self.n} values, got {len(self.values)}")
        if any(v < 0 for v in self.values):
            raise ValueError("counts must be nonnegative")

    def __getitem__(self, k: int) -> int:
        if not 1 <= k <= self.n:
            return 0
        return self.values[k - 1]

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __len__(self) -> int:
        return self.n

    @property
    def total(self) -> int:
        return sum(self.values)


def _check_stat(stat: str) -> str:
    if stat not in STATS:
        raise ValueError(f"stat must be one of {STATS}, got {stat!r}")
    return stat


def _check_args(n: int, family: Family) -> None:
    if n < 1:
        raise ValueError("n must be a positive integer")
    if family.even_only and n % 2:
        raise ValueError(f"family {family.value!r} is defined only for even n, got n={n}")


def _sums_for_first_part(n: int, family: Family, k: int) -> tuple[int, int]:
    inv = ell = 0
    for lam in partitions_of(n, family, first_parts=(k,)):
        f = num_syt(lam)
        inv += f
        ell += f * f
    return inv, ell


def _sums_task(args):
    return _sums_for_first_part(*args)


@lru_cache(maxsize=256)
def _shape_sums(n: int, family: Family, jobs: int = 1) -> tuple[tuple[int, ...], tuple[int, ...]]:
    tasks = [(n, family, k) for k in range(1, n + 1)]
    if jobs > 1 and n > 20:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            # Largest k-classes are in the middle; chunksize 1 keeps load even.
            results = list(pool.map(_sums_task, tasks, chunksize=1))
    else:
        results = [_sums_task(t) for t in tasks]
    return tuple(r[0] for r in results), tuple(r[1] for r in results)


def ell_seq(n: int, family: "str | Family" = Family.ALL, jobs: int = 1) -> CountSequence:
    """Number of permutations of [n] with LIS length k and shape in ``family``."""
    family = Family.parse(family)
    if family is Family.SKEW_MERGED:
        return skew_merged_seq(n, "ell")
    _check_args(n, family)
    return CountSequence(n, _shape_sums(n, family, max(jobs, 1))[1], family.value, "ell")


def inv_seq(n: int, family: "str | Family" = Family.ALL, jobs: int = 1) -> CountSequence:
    """Number of involutions of [n] with LIS length k and shape in ``family``."""
    family = Family.parse(family)
    if family is Family.SKEW_MERGED:
        return skew_merged_seq(n, "inv")
    _check_args(n, family)
    return CountSequence(n, _shape_sums(n, family, max(jobs, 1))[0], family.value, "inv")


def count_seq(n: int, stat: str = "ell", family: "str | Family" = Family.ALL, jobs: int = 1) -> CountSequence:
    _check_stat(stat)
    return (ell_seq if stat == "ell" else inv_seq)(n, family, jobs)


def multinomial(n: int, parts: Sequence[int]) -> int:
    """Exact multinomial coefficient by iterated binomials; 0 for negative parts."""
    if any(p < 0 for p in parts) or sum(parts) != n:
        return 0
    out, left = 1, n
    for p in parts:
        out *= comb(left, p)
        left -= p
    return out


def dhook_closed_form(n: int, k: int) -> int:
    """Involutions of [2n] with shape (k, k, 1^(2n-2k)); 0 outside 1 <= k <= n."""
    if not 1 <= k <= n:
        return 0
    num = multinomial(2 * n, (1, k - 1, k, 2 * n - 2 * k))
    den = (2 * n - k) * (2 * n - k + 1)
    q, r = divmod(num, den)
    assert r == 0
    return q


def d2row_closed_form(n: int, k: int) -> int:
    """Involutions of [2n] with shape (k, k, n-k, n-k); 0 outside n/2 <= k <= n."""
    if not (2 * k >= n and k <= n) or n < 1:
        return 0
    d = 2 * k - n
    num = (d + 1) * (d + 2) ** 2 * (d + 3) * multinomial(2 * n, (k, k, n - k, n - k))
    den = (k + 1) ** 2 * (k + 2) ** 2 * (k + 3) * (n - k + 1)
    q, r = divmod(num, den)
    assert r == 0
    return q


def standardize(word: Sequence[int]) -> tuple[int, ...]:
    order = sorted(range(len(word)), key=word.__getitem__)
    out = [0] * len(word)
    for rank, i in enumerate(order, start=1):
        out[i] = rank
    return tuple(out)


def avoids(sigma: Sequence[int], pattern: Sequence[int]) -> bool:
    """True iff no subsequence of ``sigma`` standardizes to ``pattern``."""
    pattern = tuple(pattern)
    k = len(pattern)
    if k > len(sigma):
        return True
    return not any(standardize(sub) == pattern for sub in combinations(sigma, k))


def is_skew_merged(sigma: Sequence[int]) -> bool:
    """Avoidance of 2143 and 3412 in a single pass over 4-subsequences."""
    for a, b, c, d in combinations(sigma, 4):
        if b < a < d < c or c < d < a < b:
            return False
    return True


def skew_merged_seq(n: int, stat: str = "ell", limit: int = SKEW_MERGED_LIMIT) -> CountSequence:
    """Brute-force count of skew-merged permutations (or involutions) by LIS length."""
    _check_stat(stat)
    if n < 1:
        raise ValueError("n must be a positive integer")
    if n > limit:
        raise ValueError(f"skew-merged counting is brute force over n!; n={n} exceeds the limit {limit}")
    counts = [0] * n
    for sigma in permutations(range(1, n + 1)):
        if stat == "inv" and not is_involution(sigma):
            continue
        if is_skew_merged(sigma):
            counts[lis_length(sigma) - 1] += 1
    return CountSequence(n, tuple(counts), Family.SKEW_MERGED.value, stat)


def gen_poly(seq: Iterable[int]) -> PolySeq:
    """Generating polynomial sum_k seq[k] q^k (constant term 0)."""
    return PolySeq((0,) + tuple(seq))


"""Integer partitions, hook lengths and the shape families used for counting.

Partitions are stored as weakly decreasing tuples of positive integers.  All
enumerators yield shapes in reverse lexicographic order, so ``(n,)`` comes
first and ``(1,) * n`` last.
"""

from __future__ import annotations

from enum import Enum
from itertools import chain
from math import factorial, prod
from typing import Iterable, Iterator


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    >>> Partition((3, 1)).n
    4
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def _trusted(cls, parts: tuple[int, ...]) -> "Partition":
        return tuple.__new__(cls, parts)

    @property
    def n(self) -> int:
        return sum(self)

    @property
    def parts(self) -> tuple[int, ...]:
        return tuple(self)

    def __repr__(self) -> str:
        return f"Partition{tuple(self)!r}"


class Family(str, Enum):
    """Shape families.  ``SKEW_MERGED`` is a permutation class, not a shape set."""

    ALL = "all"
    HOOK = "hook"
    TWO_ROW = "two-row"
    EVEN_COLUMN = "even-column"
    DOUBLE_HOOK = "double-hook"
    DOUBLED_TWO_ROW = "doubled-two-row"
    SKEW_MERGED = "skew-merged"

    @classmethod
    def parse(cls, tag: "str | Family") -> "Family":
        if isinstance(tag, Family):
            return tag
        try:
            return _ALIASES[tag.lower()]
        except KeyError:
            raise ValueError(f"unknown family {tag!r}") from None

    @property
    def even_only(self) -> bool:
        return self in (Family.EVEN_COLUMN, Family.DOUBLE_HOOK, Family.DOUBLED_TWO_ROW)


_ALIASES = {f.value: f for f in Family}
_ALIASES.update({
    "2row": Family.TWO_ROW,
    "ecol": Family.EVEN_COLUMN,
    "dhook": Family.DOUBLE_HOOK,
    "d2row": Family.DOUBLED_TWO_ROW,
    "skm": Family.SKEW_MERGED,
})


def _bounded(n: int, m: int) -> Iterator[tuple[int, ...]]:
    # Partitions of n with every part <= m, reverse lexicographic.
    if n == 0:
        yield ()
        return
    m = min(m, n)
    if m < 1:
        return
    q, r = divmod(n, m)
    a = [m] * q + ([r] if r else [])
    while True:
        yield tuple(a)
        ones = 0
        while a and a[-1] == 1:
            a.pop()
            ones += 1
        if not a:
            return
        v = a[-1] - 1
        a[-1] = v
        q, r = divmod(ones + 1, v)
        a.extend([v] * q)
        if r:
            a.append(r)


def partitions_with_first_part(n: int, k: int) -> Iterator[Partition]:
    """Partitions of ``n`` whose first part is exactly ``k``, reverse lex."""
    if not 1 <= k <= n:
        return
    for rest in _bounded(n - k, k):
        yield Partition._trusted((k,) + rest)


def double(mu: Iterable[int]) -> Partition:
    """Repeat every part twice: ``(3, 1) -> (3, 3, 1, 1)``."""
    return Partition._trusted(tuple(chain.from_iterable((p, p) for p in Partition(mu))))


def _family_first_part(n: int, family: Family, k: int) -> Iterator[Partition]:
    if family is Family.ALL:
        yield from partitions_with_first_part(n, k)
    elif family is Family.HOOK:
        if 1 <= k <= n:
            yield Partition._trusted((k,) + (1,) * (n - k))
    elif family is Family.TWO_ROW:
        if n >= 1 and 2 * k >= n and k <= n:
            yield Partition._trusted((k, n - k) if k < n else (k,))
    elif n % 2 == 0 and n > 0:
        m = n // 2
        if family is Family.EVEN_COLUMN:
            for mu in partitions_with_first_part(m, k):
                yield double(mu)
        elif family is Family.DOUBLE_HOOK:
            if 1 <= k <= m:
                yield Partition._trusted((k, k) + (1,) * (2 * (m - k)))
        elif family is Family.DOUBLED_TWO_ROW:
            if 2 * k >= m and k <= m:
                yield double((k, m - k) if k < m else (k,))
        else:
            raise ValueError(f"{family.value} is not a shape family")
    elif family is Family.SKEW_MERGED:
        raise ValueError("skew-merged is not a shape family")


def partitions_of(
    n: int,
    family: "str | Family" = Family.ALL,
    first_parts: Iterable[int] | None = None,
) -> Iterator[Partition]:
    """Yield the partitions of ``n`` in ``family``, reverse lexicographic.

    ``first_parts`` restricts the stream to the given first-part values, which
    is how callers split the enumeration for parallel sums.  Even-only
    families produce an empty stream for odd ``n``.
    """
    family = Family.parse(family)
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        if family is Family.ALL:
            yield Partition._trusted(())
        return
    ks = range(n, 0, -1) if first_parts is None else sorted(set(first_parts), reverse=True)
    for k in ks:
        yield from _family_first_part(n, family, k)


def conjugate(shape: Iterable[int]) -> Partition:
    shape = tuple(shape)
    if not shape:
        return Partition._trusted(())
    return Partition._trusted(tuple(sum(1 for p in shape if p > j) for j in range(shape[0])))


def hook_lengths(shape: Iterable[int]) -> list[list[int]]:
    """Hook length (arm + leg + 1) of every cell, row by row."""
    shape = tuple(shape)
    conj = conjugate(shape)
    return [[row - j + conj[j] - i - 1 for j in range(row)] for i, row in enumerate(shape)]


def num_syt(shape: Iterable[int]) -> int:
    """Number of standard Young tableaux of the given shape (hook formula)."""
    shape = tuple(shape)
    conj = conjugate(shape)
    hooks = prod(row - j + conj[j] - i - 1 for i, row in enumerate(shape) for j in range(row))
    n = sum(shape)
    f, rem = divmod(factorial(n), hooks)
    assert rem == 0
    return f


def is_hook(shape: Iterable[int]) -> bool:
    shape = tuple(shape)
    return all(p == 1 for p in shape[1:])


def is_two_row(shape: Iterable[int]) -> bool:
    return len(tuple(shape)) <= 2


def is_even_column(shape: Iterable[int]) -> bool:
    """True when every column has even length (rows pair up)."""
    shape = tuple(shape)
    return len(shape) % 2 == 0 and all(shape[i] == shape[i + 1] for i in range(0, len(shape), 2))


def is_double_hook(shape: Iterable[int]) -> bool:
    shape = tuple(shape)
    return is_even_column(shape) and len(shape) >= 2 and all(p == 1 for p in shape[2:])


def is_doubled_two_row(shape: Iterable[int]) -> bool:
    shape = tuple(shape)
    return is_even_column(shape) and 2 <= len(shape) <= 4


_PREDICATES = {
    Family.ALL: lambda shape: True,
    Family.HOOK: is_hook,
    Family.TWO_ROW: is_two_row,
    Family.EVEN_COLUMN: is_even_column,
    Family.DOUBLE_HOOK: is_double_hook,
    Family.DOUBLED_TWO_ROW: is_doubled_two_row,
}


def in_family(shape: Iterable[int], family: "str | Family") -> bool:
    """Membership test by predicate; independent of the direct generators."""
    family = Family.parse(family)
    if family not in _PREDICATES:
        raise ValueError(f"{family.value} is not a shape family")
    return _PREDICATES[family](tuple(shape))

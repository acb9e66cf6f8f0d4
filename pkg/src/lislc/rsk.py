"""Robinson-Schensted row insertion, its inverse, and the LIS statistic."""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from typing import Iterable, Sequence

from .partitions import Partition

Permutation = tuple[int, ...]


def as_permutation(word: Iterable[int]) -> Permutation:
    """Validate ``word`` as a permutation of ``[n]`` in one-line notation."""
    word = tuple(int(x) for x in word)
    if sorted(word) != list(range(1, len(word) + 1)):
        raise ValueError(f"not a permutation of [{len(word)}]: {word}")
    return word


def parse_permutation(text: str) -> Permutation:
    """Accept ``"4172536"`` (n <= 9) or a comma/space separated list."""
    text = text.strip()
    if "," in text or " " in text:
        parts = text.replace(",", " ").split()
    else:
        parts = list(text)
    return as_permutation(int(p) for p in parts)


def is_involution(word: Sequence[int]) -> bool:
    return all(word[x - 1] == i for i, x in enumerate(word, start=1))


class StandardTableau:
    """Standard Young tableau stored as a tuple of row tuples (English notation)."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[int]]):
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        rows = tuple(r for r in rows if r)
        n = sum(len(r) for r in rows)
        if sorted(x for r in rows for x in r) != list(range(1, n + 1)):
            raise ValueError(f"entries must be exactly 1..{n}")
        for i, r in enumerate(rows):
            if i and len(r) > len(rows[i - 1]):
                raise ValueError("row lengths must weakly decrease")
            if any(r[j] >= r[j + 1] for j in range(len(r) - 1)):
                raise ValueError(f"row {i} is not increasing")
            if i and any(rows[i - 1][j] >= r[j] for j in range(len(r))):
                raise ValueError(f"column violation between rows {i - 1} and {i}")
        self.rows = rows

    @classmethod
    def _trusted(cls, rows) -> "StandardTableau":
        t = object.__new__(cls)
        t.rows = tuple(tuple(r) for r in rows)
        return t

    @property
    def shape(self) -> Partition:
        return Partition._trusted(tuple(len(r) for r in self.rows))

    @property
    def n(self) -> int:
        return sum(len(r) for r in self.rows)

    def row_of(self, value: int) -> int:
        for i, r in enumerate(self.rows):
            if value in r:
                return i
        raise KeyError(value)

    def __eq__(self, other):
        return isinstance(other, StandardTableau) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"StandardTableau({[list(r) for r in self.rows]})"


def rsk(word: Sequence[int]) -> tuple[StandardTableau, StandardTableau]:
    """Robinson-Schensted by row insertion: returns (insertion, recording)."""
    P: list[list[int]] = []
    Q: list[list[int]] = []
    for step, x in enumerate(word, start=1):
        r = 0
        while True:
            if r == len(P):
                P.append([x])
                Q.append([step])
                break
            row = P[r]
            j = bisect_right(row, x)
            if j == len(row):
                row.append(x)
                Q[r].append(step)
                break
            row[j], x = x, row[j]
            r += 1
    return StandardTableau._trusted(P), StandardTableau._trusted(Q)


def rsk_inverse(P: StandardTableau, Q: StandardTableau) -> Permutation:
    if P.shape != Q.shape:
        raise ValueError(f"shape mismatch: {tuple(P.shape)} vs {tuple(Q.shape)}")
    rows = [list(r) for r in P.rows]
    where = {v: i for i, r in enumerate(Q.rows) for v in r}
    n = P.n
    word = [0] * n
    for m in range(n, 0, -1):
        r = where[m]
        x = rows[r].pop()
        for i in range(r - 1, -1, -1):
            row = rows[i]
            j = bisect_left(row, x) - 1
            row[j], x = x, row[j]
        if not rows[r]:
            rows.pop()
        word[m - 1] = x
    return tuple(word)


def lis_length(word: Sequence[int]) -> int:
    """Length of a longest increasing subsequence, by patience sorting."""
    tops: list[int] = []
    for x in word:
        j = bisect_left(tops, x)
        if j == len(tops):
            tops.append(x)
        else:
            tops[j] = x
    return len(tops)


def lds_length(word: Sequence[int]) -> int:
    return lis_length([-x for x in word])


def shape_of(word: Sequence[int]) -> Partition:
    return rsk(word)[0].shape


def tableau_involution(P: StandardTableau) -> Permutation:
    """The involution whose RS pair is (P, P)."""
    return rsk_inverse(P, P)


def involution_tableau(word: Sequence[int]) -> StandardTableau:
    """Inverse direction of :func:`tableau_involution`."""
    if not is_involution(word):
        raise ValueError(f"not an involution: {tuple(word)}")
    P, Q = rsk(word)
    assert P == Q
    return P


def ulam_distance_from_identity(word: Sequence[int]) -> int:
    return len(word) - lis_length(word)


def count_fixed_points(word: Sequence[int]) -> int:
    if not is_involution(word):
        raise ValueError(f"not an involution: {tuple(word)}")
    return sum(1 for i, x in enumerate(word, start=1) if x == i)

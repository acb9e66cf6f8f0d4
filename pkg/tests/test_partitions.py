from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from lislc.partitions import (
    Family,
    Partition,
    conjugate,
    double,
    in_family,
    is_even_column,
    num_syt,
    partitions_of,
    partitions_with_first_part,
)

from oracles import partition_count, syt_count, telephone


@st.composite
def partitions(draw, max_n=30):
    n = draw(st.integers(min_value=1, max_value=max_n))
    parts, left = [], n
    while left:
        p = draw(st.integers(min_value=1, max_value=min(left, parts[-1] if parts else left)))
        parts.append(p)
        left -= p
    return Partition(parts)


def test_partitions_of_one():
    assert list(partitions_of(1)) == [(1,)]


@pytest.mark.parametrize("n", [4, 10, 25, 50])
def test_partition_counts_match_pentagonal_recurrence(n):
    assert sum(1 for _ in partitions_of(n)) == partition_count(n)


def test_partition_count_50_is_frozen():
    assert partition_count(50) == 204226


def test_reverse_lexicographic_order():
    ps = list(partitions_of(12))
    assert ps == sorted(ps, reverse=True)
    assert len(set(ps)) == len(ps)


def test_split_by_first_part_covers_everything():
    n = 15
    pieces = [p for k in range(n, 0, -1) for p in partitions_with_first_part(n, k)]
    assert pieces == list(partitions_of(n))


def test_even_column_empty_for_odd_n():
    assert list(partitions_of(5, "even-column")) == []


@pytest.mark.parametrize("family", [f for f in Family if f is not Family.SKEW_MERGED])
@pytest.mark.parametrize("n", range(1, 15))
def test_family_generators_agree_with_predicates(family, n):
    generated = list(partitions_of(n, family))
    filtered = [p for p in partitions_of(n) if in_family(p, family)]
    assert generated == filtered


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))
    assert Partition((3, 1)).n == 4


@pytest.mark.parametrize("shape, expected", [
    ((3, 1), (2, 1, 1)),
    ((5,), (1, 1, 1, 1, 1)),
    ((4, 1, 1), (3, 1, 1, 1)),
    ((3, 3, 1, 1), (4, 2, 2)),
])
def test_conjugate_examples(shape, expected):
    assert conjugate(shape) == expected


@given(partitions())
def test_conjugate_is_an_involution(lam):
    assert conjugate(conjugate(lam)) == lam


@given(partitions(max_n=15))
def test_num_syt_transpose_invariant(lam):
    assert num_syt(lam) == num_syt(conjugate(lam))


@pytest.mark.parametrize("shape, expected", [((6,), 1), ((4, 1, 1), comb(5, 3)), ((2, 2), 2)])
def test_num_syt_examples(shape, expected):
    assert num_syt(shape) == expected


@pytest.mark.parametrize("n", range(1, 9))
def test_num_syt_matches_enumeration(n):
    for lam in partitions_of(n):
        assert num_syt(lam) == syt_count(lam), lam


@pytest.mark.parametrize("n", range(1, 11))
def test_rsk_count_identities(n):
    fs = [num_syt(lam) for lam in partitions_of(n)]
    assert sum(f * f for f in fs) == factorial(n)
    assert sum(fs) == telephone(n)


@pytest.mark.parametrize("shape, expected", [((2, 2), True), ((3, 1), False), ((3, 3, 1, 1), True)])
def test_is_even_column(shape, expected):
    assert is_even_column(shape) is expected
    assert all(c % 2 == 0 for c in conjugate(shape)) is expected


def test_double_examples():
    assert double((1,)) == (1, 1)
    assert double((4,)) == (4, 4)
    assert double((3, 1)) == (3, 3, 1, 1)


@pytest.mark.parametrize("n", range(1, 13))
def test_even_column_shapes_are_exactly_doubles(n):
    assert list(partitions_of(2 * n, "ecol")) == [double(mu) for mu in partitions_of(n)]

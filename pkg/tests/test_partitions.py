from fractions import Fraction

import pytest

from brauerblocks.partitions import (
    Partition,
    PartitionError,
    canonical_key,
    enumerate_partitions,
    half,
    parse_partition,
    partitions_of_size,
    twice,
)


def test_parse_basic():
    assert parse_partition("2,1,1") == Partition((2, 1, 1))
    assert parse_partition("") == Partition()
    assert parse_partition("[]") == Partition()
    assert parse_partition("[2, 1]") == Partition((2, 1))
    assert parse_partition(" 3 , 3 ") == Partition((3, 3))


def test_parse_rejects_increasing():
    with pytest.raises(PartitionError, match="not weakly decreasing"):
        parse_partition("1,2")


@pytest.mark.parametrize("bad", ["0", "-1", "x", "2,,1", "1.5"])
def test_parse_rejects_bad_tokens(bad):
    with pytest.raises(PartitionError):
        parse_partition(bad)


def test_transpose_examples():
    assert Partition((2, 1, 1)).transpose() == Partition((3, 1))
    assert Partition().transpose() == Partition()
    assert Partition((3, 3)).transpose() == Partition((2, 2, 2))


def test_transpose_involution_and_size():
    for lam in enumerate_partitions(12):
        t = lam.transpose()
        assert t.transpose() == lam
        assert t.size == lam.size


def test_contents_examples():
    assert Partition().contents(7) == []
    assert sorted(Partition((2, 1)).contents(1)) == [-1, 0, 1]
    assert Partition((1,)).contents(2) == [Fraction(1, 2)]


def test_contents_negate_under_transpose():
    for delta in (-1, 0, 1, 2):
        base = Fraction(delta - 1, 2)
        for lam in enumerate_partitions(10):
            direct = sorted(lam.transpose().contents(delta))
            reflected = sorted(2 * base - c for c in lam.contents(delta))
            assert direct == reflected


def _count_partitions(n: int, largest: int, cache={}) -> int:
    # independent counter, no shared code with the generator
    if n == 0:
        return 1
    if largest == 0:
        return 0
    key = (n, largest)
    if key not in cache:
        total = 0
        for first in range(1, min(n, largest) + 1):
            total += _count_partitions(n - first, first)
        cache[key] = total
    return cache[key]


def test_enumeration_counts_match_independent_counter():
    for n in range(21):
        assert len(partitions_of_size(n)) == _count_partitions(n, n)
    assert len(enumerate_partitions(3)) == 7
    assert len(enumerate_partitions(0)) == 1


def test_enumeration_order():
    assert enumerate_partitions(2) == [Partition(), Partition((1,)), Partition((2,)), Partition((1, 1))]
    assert partitions_of_size(3) == [Partition((3,)), Partition((2, 1)), Partition((1, 1, 1))]
    ordered = enumerate_partitions(6)
    keys = [canonical_key(p) for p in ordered]
    assert keys == sorted(keys)
    assert len(set(ordered)) == len(ordered)


def test_constructor_rejects_invalid():
    with pytest.raises(PartitionError):
        Partition((1, 2))
    with pytest.raises(PartitionError):
        Partition((2, 0))


def test_half_integer_helpers():
    assert half(3) == Fraction(3, 2)
    assert twice(Fraction(-5, 2)) == -5
    assert twice(4) == 8
    with pytest.raises(ValueError):
        twice(Fraction(1, 3))

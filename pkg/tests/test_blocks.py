from fractions import Fraction

import pytest

from brauerblocks.blocks import (
    block_key,
    brauer_algebra_blocks,
    classify_weight_class,
    dot_orbit_member,
    enumerate_block_members,
    same_block,
    same_block_report,
    sector_charge,
)
from brauerblocks.partitions import Partition, enumerate_partitions
from brauerblocks.sequences import WILDCARD, make_sequence, same_orbit
from brauerblocks.weights import same_bar_weight

EMPTY = Partition()


def test_same_block_examples():
    assert same_block(EMPTY, Partition((2, 2, 2)), 2)
    assert not same_block(EMPTY, Partition((1, 1)), 2)
    assert same_block(Partition((3, 1)), Partition((3, 1)), -4)
    assert not same_block(Partition((2, 2)), Partition((2, 1)), 1)


def test_same_block_semisimple_for_nonintegral_delta():
    lam, mu = Partition((2, 1)), Partition((2, 1))
    assert same_block(lam, mu, Fraction(7, 2))
    assert not same_block(lam, Partition((3,)), Fraction(7, 2))
    assert not same_block(lam, Partition((1, 1, 1)), Fraction(1, 3))


def test_size_parity_short_circuit():
    assert not same_block(EMPTY, Partition((1,)), 2)
    assert not same_block(Partition((2,)), Partition((1, 1, 1)), 1)


def test_block_key_examples():
    vac = block_key(EMPTY, 2)
    assert vac.deviations == () and vac.neg_parity == 0
    assert block_key(Partition((2, 2, 2)), 2) == vac

    flipped = block_key(Partition((1, 1)), 2)
    assert flipped.deviations == () and flipped.neg_parity == 1
    assert flipped != vac


def test_block_key_requires_integral_delta():
    with pytest.raises(ValueError, match="integral delta"):
        block_key(EMPTY, Fraction(5, 2))


def test_block_key_decides_blocks():
    for delta in range(-4, 7):
        parts = enumerate_partitions(8)
        keys = {lam: block_key(lam, delta) for lam in parts}
        for i, lam in enumerate(parts):
            for mu in parts[i:]:
                assert same_block(lam, mu, delta) == (keys[lam] == keys[mu])


def test_block_refines_bar_weight():
    for delta in range(-3, 6):
        parts = enumerate_partitions(8)
        keys = {lam: block_key(lam, delta) for lam in parts}
        grouped: dict = {}
        for lam in parts:
            grouped.setdefault(keys[lam], []).append(lam)
        for members in grouped.values():
            anchor = members[0]
            for mu in members[1:]:
                assert same_bar_weight(anchor, mu, delta)


def test_classify_examples():
    split = classify_weight_class(EMPTY, 2)
    assert split.split and split.partner == Partition((1, 1))

    assert not classify_weight_class(Partition((1,)), 1).split
    assert not classify_weight_class(EMPTY, 0).split
    with pytest.raises(ValueError):
        classify_weight_class(EMPTY, Fraction(1, 2))


def test_classify_partner_postconditions():
    for delta in (-2, 0, 2, 4):
        for lam in enumerate_partitions(6):
            cls = classify_weight_class(lam, delta)
            zero = make_sequence(lam.transpose(), sector_charge(delta)).has_zero_entry()
            assert cls.split == (not zero)
            if cls.split:
                assert same_bar_weight(lam, cls.partner, delta)
                assert not same_block(lam, cls.partner, delta)


def test_enumerate_block_members_examples():
    assert enumerate_block_members(EMPTY, 2, 6) == [EMPTY, Partition((2, 2, 2))]
    assert enumerate_block_members(EMPTY, 2, 5) == [EMPTY]
    assert enumerate_block_members(EMPTY, 0, 2) == [EMPTY, Partition((2,))]
    assert enumerate_block_members(Partition((2, 1)), Fraction(3, 2), 8) == [Partition((2, 1))]
    with pytest.raises(ValueError):
        enumerate_block_members(Partition((2, 2)), 2, 3)


def test_brauer_algebra_blocks_examples():
    assert brauer_algebra_blocks(2, 2) == [
        [EMPTY],
        [Partition((2,))],
        [Partition((1, 1))],
    ]
    assert brauer_algebra_blocks(2, 0) == [
        [EMPTY, Partition((2,))],
        [Partition((1, 1))],
    ]
    assert brauer_algebra_blocks(1, 5) == [[Partition((1,))]]
    assert brauer_algebra_blocks(0, -2) == [[EMPTY]]


def test_brauer_algebra_blocks_cover_labels():
    for delta in (-2, 1, 4):
        for n in (3, 4):
            blocks = brauer_algebra_blocks(n, delta)
            flat = [p for group in blocks for p in group]
            assert len(flat) == len(set(flat))
            assert {p.size for p in flat} == set(range(n % 2, n + 1, 2))
            for group in blocks:
                anchor = group[0]
                for mu in group[1:]:
                    assert same_block(anchor, mu, delta)


def test_dot_orbit_examples():
    assert dot_orbit_member(EMPTY, Partition((3, 3)), 6, 2)
    assert not dot_orbit_member(EMPTY, Partition((1, 1)), 2, 2)
    assert dot_orbit_member(Partition((2, 1)), Partition((2, 1)), 4, -1)
    assert dot_orbit_member(EMPTY, EMPTY, 0, 3)


def test_dot_orbit_guards():
    with pytest.raises(ValueError, match="length"):
        dot_orbit_member(Partition((1, 1, 1)), EMPTY, 2, 2)
    with pytest.raises(ValueError, match="safety cap"):
        dot_orbit_member(EMPTY, EMPTY, 9, 2)
    with pytest.raises(ValueError, match="integral"):
        dot_orbit_member(EMPTY, EMPTY, 2, Fraction(1, 2))


def test_dot_orbit_matches_sequence_orbits_small():
    parts = enumerate_partitions(3)
    for delta in (-1, 0, 2):
        charge = sector_charge(delta)
        for a in parts:
            for b in parts:
                if (a.size - b.size) % 2 != 0:
                    continue
                expected = same_orbit(make_sequence(a, charge), make_sequence(b, charge))
                n = max(a.size, b.size)
                assert dot_orbit_member(a, b, n, delta) == expected
                assert dot_orbit_member(a, b, n + 2, delta) == expected


def test_same_block_report_fields():
    report = same_block_report(EMPTY, Partition((2, 2, 2)), 2)
    assert report["same_block"] is True
    assert report["reason"] == {
        "semisimple": False,
        "abs_multiset_equal": True,
        "parity_lhs": 0,
        "parity_rhs": 0,
        "zero_entry": False,
    }
    assert report["block_key"] == {"twiceCharge": 0, "devMap": [], "negParity": 0}

    semisimple = same_block_report(EMPTY, EMPTY, Fraction(7, 2))
    assert semisimple["same_block"] is True
    assert semisimple["reason"]["semisimple"] is True
    assert semisimple["block_key"] is None

    zero_case = same_block_report(EMPTY, Partition((2,)), 0)
    assert zero_case["same_block"] is True
    assert zero_case["reason"]["zero_entry"] is True
    assert zero_case["block_key"]["negParity"] == WILDCARD

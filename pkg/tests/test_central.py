import random
from fractions import Fraction

import pytest

from brauerblocks.central import (
    FactoredRational,
    TruncatedLaurent,
    brauer_gammas,
    central_character,
    centrally_equivalent,
    check_admissible,
    check_reflection_product,
    gamma_factor,
    parameter_series,
    weight_of_rational,
)
from brauerblocks.partitions import Partition, enumerate_partitions
from brauerblocks.weights import alpha_in_omega, vector_diff

H = Fraction(1, 2)


def test_gamma_factor_examples():
    assert gamma_factor(0) == FactoredRational(Fraction(1), ())

    g = gamma_factor(H)
    assert dict(g.factors) == {
        Fraction(-3, 2): 1,
        H: 3,
        Fraction(3, 2): -1,
        -H: -3,
    }
    assert g.render() == "(u-1/2)^3(u+3/2)/((u-3/2)(u+1/2)^3)"

    g1 = gamma_factor(1)
    assert dict(g1.factors) == {-2: 1, 1: 2, 2: -1, -1: -2}
    assert g1.render() == "(u-1)^2(u+2)/((u-2)(u+1)^2)"


def test_gamma_factor_inverse_symmetry():
    for t in range(-7, 8):
        c = Fraction(t, 2)
        product = gamma_factor(c) * gamma_factor(-c)
        assert product == FactoredRational(Fraction(1), ())


def test_central_character_examples():
    empty = central_character(Partition(), Fraction(7, 3))
    assert empty == FactoredRational.from_parts(Fraction(-1), {H: 1, -H: 1})
    assert empty.render() == "-(u-1/2)(u+1/2)"

    assert central_character(Partition((2, 2)), 1) == empty
    assert central_character(Partition((2, 1)), 1) == empty

    one_box = central_character(Partition((1,)), 2)
    assert one_box.render() == "-(u-1/2)^4(u+3/2)/((u-3/2)(u+1/2)^2)"
    assert dict(one_box.factors) == {
        H: 4,
        Fraction(-3, 2): 1,
        Fraction(3, 2): -1,
        -H: -2,
    }


def _defining_product(lam: Partition, delta, u: Fraction) -> Fraction:
    # literal product over boxes, no factoring shared with the implementation
    value = (H - u) * (H + u)
    for c in lam.contents(delta):
        value *= ((u + c) ** 2 - 1) * (u - c) ** 2
        value /= ((u - c) ** 2 - 1) * (u + c) ** 2
    return value


def test_character_matches_defining_product_at_random_points():
    rng = random.Random(20240809)
    deltas = list(range(-3, 6)) + [Fraction(7, 2), Fraction(-1, 3)]
    for delta in deltas:
        for lam in enumerate_partitions(8):
            char = central_character(lam, delta)
            points = 0
            while points < 7:
                u = Fraction(rng.randint(-400, 400), rng.randint(11, 23))
                try:
                    expected = _defining_product(lam, delta, u)
                    got = char.evaluate(u)
                except ZeroDivisionError:
                    continue
                assert got == expected
                points += 1


def test_centrally_equivalent_examples():
    assert centrally_equivalent(Partition((2, 2)), Partition((2, 1)), 1)
    assert centrally_equivalent(Partition((3, 1)), Partition((3, 1)), Fraction(5, 2))
    assert not centrally_equivalent(Partition((1,)), Partition(), 2)


def test_weight_of_rational_examples():
    assert weight_of_rational(FactoredRational(Fraction(5), ())) == {}
    assert weight_of_rational(gamma_factor(H)) == {
        Fraction(-3, 2): 1,
        H: 3,
        Fraction(3, 2): -1,
        -H: -3,
    }
    for t in range(-9, 10):
        a = Fraction(t, 2)
        assert weight_of_rational(gamma_factor(a)) == vector_diff(
            alpha_in_omega(a), alpha_in_omega(-a)
        )


def test_parameter_series_examples():
    flat = parameter_series(1, 5)
    assert flat.coefficient(1) == 1
    assert flat.coefficient(0) == H
    assert all(flat.coefficient(-a) == 0 for a in range(1, 6))

    geo = parameter_series(3, 3)
    assert [geo.coefficient(d) for d in (1, 0, -1, -2, -3)] == [
        1,
        Fraction(5, 2),
        3,
        3,
        3,
    ]

    for delta in range(-4, 5):
        assert parameter_series(delta, 2).coefficient(0) == Fraction(delta) - H


def test_truncated_multiplication_tracks_exactness():
    a = TruncatedLaurent({1: Fraction(1), 0: Fraction(2), -2: Fraction(5)}, -2)
    b = TruncatedLaurent({0: Fraction(1), -1: Fraction(3)}, -1)
    prod = a * b
    # unknown coefficients below the factors' truncations forbid degrees
    # under max(lowA + topB, lowB + topA)
    assert prod.low == max(-2 + 0, -1 + 1)
    assert prod.coefficient(1) == 1
    assert prod.coefficient(0) == 5


def test_reflection_product_identity():
    assert check_reflection_product(brauer_gammas(3, 21), 20)
    assert check_reflection_product(brauer_gammas(1, 21), 20)

    broken = brauer_gammas(3, 21)
    broken[1] = Fraction(0)
    assert not check_reflection_product(broken, 20)

    with pytest.raises(ValueError):
        check_reflection_product(brauer_gammas(3, 5), 20)


def test_admissibility_recursion():
    assert check_admissible([Fraction(3)] * 20, 19)
    assert not check_admissible([Fraction(3), Fraction(1)] + [Fraction(3)] * 18, 19)
    assert check_admissible([Fraction(0)] * 20, 19)
    with pytest.raises(ValueError):
        check_admissible([Fraction(1)] * 3, 10)


def test_brauer_family_is_admissible():
    for delta in range(-5, 7):
        gammas = brauer_gammas(delta, 25)
        assert check_admissible(gammas, 24)
        assert check_reflection_product(gammas, 24)


def test_render_edge_cases():
    assert FactoredRational(Fraction(1), ()).render() == "1"
    assert FactoredRational(Fraction(-2, 3), ()).render() == "-2/3"
    f = FactoredRational.from_parts(Fraction(3), {Fraction(0): 2, Fraction(1): -1})
    assert f.render() == "3*u^2/((u-1))"
    json_form = central_character(Partition((1,)), 2).to_json()
    assert json_form["constant"] == [-1, 1]
    assert [1, 2, 4] in json_form["factors"]

from __future__ import annotations

import itertools
import math
import random

import pytest

from hauteur import configure
from hauteur.exactmath import (
    Factorization,
    a_r,
    gcd_of_products,
    gcd_of_products_chain,
    interval_sign,
    lcm_list,
    valuation,
)
from hauteur.exceptions import InputError, PrecisionError


def _brute_gcd_of_products(values: list[int]) -> int:
    products = [math.prod(v for i, v in enumerate(values) if i != j) for j in range(len(values))]
    return math.gcd(*products)


@pytest.mark.parametrize(("n", "q", "expected"), [(8, 2, 3), (1, 7, 0), (20, 5, 1), (3**40, 3, 40)])
def test_valuation_examples(n: int, q: int, expected: int) -> None:
    assert valuation(n, q) == expected


def test_valuation_rejects_zero_and_composite_base() -> None:
    with pytest.raises(InputError, match="positive"):
        valuation(0, 2)
    with pytest.raises(InputError, match="prime"):
        valuation(12, 4)


def test_valuation_is_additive() -> None:
    rng = random.Random(7)
    for _ in range(200):
        m, n = rng.randint(1, 10**6), rng.randint(1, 10**6)
        for q in (2, 3, 5, 7):
            assert valuation(m * n, q) == valuation(m, q) + valuation(n, q)


@pytest.mark.parametrize(
    ("values", "expected"), [(list(range(1, 11)), 2520), ([2, 4, 5], 20), ([7], 7)]
)
def test_lcm_list_examples(values: list[int], expected: int) -> None:
    assert lcm_list(values) == expected


def test_lcm_list_rejects_empty_and_non_positive() -> None:
    with pytest.raises(InputError, match="non-empty"):
        lcm_list([])
    with pytest.raises(InputError, match="positive"):
        lcm_list([3, 0])


def test_gcd_times_lcm_is_product() -> None:
    rng = random.Random(11)
    for _ in range(200):
        a, b = rng.randint(1, 10**9), rng.randint(1, 10**9)
        assert math.gcd(a, b) * lcm_list([a, b]) == a * b


@pytest.mark.parametrize(
    ("lambda_set", "q", "expected"),
    [(set(range(1, 11)), 2, 5), ({1, 2, 4, 5}, 2, 1), (set(range(1, 6)), 7, 0)],
)
def test_a_r_examples(lambda_set: set[int], q: int, expected: int) -> None:
    assert a_r(lambda_set, q) == expected


def test_a_r_of_singleton_is_zero() -> None:
    for e in (1, 8, 12, 3**7):
        assert a_r({e}, 2) == 0
        assert a_r({e}, 3) == 0


def test_a_r_rejects_empty_set() -> None:
    with pytest.raises(InputError, match="non-empty"):
        a_r(set(), 2)


def test_gcd_of_products_examples() -> None:
    assert gcd_of_products([12, 18]) == 6
    assert gcd_of_products([6, 10, 15]) == 30


def test_gcd_of_products_rejects_single_value() -> None:
    with pytest.raises(InputError, match="at least two"):
        gcd_of_products([5])
    with pytest.raises(InputError, match="at least two"):
        gcd_of_products_chain([5])


def test_gcd_of_products_matches_ramification_identity() -> None:
    # indices 1..10 with multiplicities N(e) = e * floor(10 / e)
    values = [e for e in range(1, 11) for _ in range(e * (10 // e))]
    expected = Factorization.product(
        Factorization.of(e) ** (e * (10 // e) - 1) for e in range(1, 11)
    ) * (2**5 * 3**2 * 5)

    assert Factorization.of(gcd_of_products_chain(values)) == expected


def test_gcd_of_products_chain_matches_closed_form_exhaustively() -> None:
    for values in itertools.product(range(1, 31), repeat=3):
        assert gcd_of_products_chain(values) == gcd_of_products(values)


@pytest.mark.slow
def test_gcd_of_products_chain_matches_brute_force_on_random_tuples() -> None:
    rng = random.Random(2024)
    for _ in range(10_000):
        values = [rng.randint(1, 10**6) for _ in range(rng.randint(2, 6))]
        expected = _brute_gcd_of_products(values)
        assert gcd_of_products(values) == expected
        assert gcd_of_products_chain(values) == expected


def test_factorization_round_trip_through_int() -> None:
    for n in (1, 2, 360, 2**64 + 1, 60 * 3**20, 12_800_000):
        assert Factorization.of(n).to_int() == n


def test_factorization_rendering_and_parsing() -> None:
    value = Factorization.of(60 * 3**20)

    assert str(value) == "2^2 * 3^21 * 5"
    assert Factorization.parse("2^2 * 3^21 * 5") == value
    assert str(Factorization.one()) == "1"
    assert Factorization.parse("1").is_one()


@pytest.mark.parametrize("text", ["2^x", "4^2", "2 ** 3", "", "2 * * 3"])
def test_factorization_parse_rejects_malformed_text(text: str) -> None:
    with pytest.raises(InputError):
        Factorization.parse(text)


def test_factorization_rejects_non_canonical_pairs() -> None:
    with pytest.raises(InputError, match="increasing"):
        Factorization(((3, 1), (2, 1)))
    with pytest.raises(InputError, match=">= 1"):
        Factorization(((2, 0),))


def test_factorization_arithmetic() -> None:
    a = Factorization.of(12)
    b = Factorization.of(90)

    assert (a * b).to_int() == 1080
    assert (a**3).to_int() == 1728
    assert a.lcm(b).to_int() == 180
    assert (a * b).divide_exact(b) == a
    assert a.divides(b * 2)
    assert not b.divides(a)
    assert b.valuation(3) == 2
    assert b.valuation(7) == 0


def test_factorization_divide_exact_rejects_non_divisor() -> None:
    with pytest.raises(InputError, match="does not divide"):
        Factorization.of(12).divide_exact(5)


def test_factorization_logarithms() -> None:
    assert float(Factorization.of(1000).log10()) == pytest.approx(3.0, rel=1e-15)
    assert float(Factorization.of(2).ln()) == pytest.approx(math.log(2), rel=1e-15)
    assert Factorization.from_dict({10**9 + 7: 1000}).estimated_digits() == 9001


def test_factorization_expansion_is_guarded() -> None:
    huge = Factorization.from_dict({5: 10**7})

    with pytest.raises(InputError, match="Refusing to expand"):
        huge.to_int()

    configure(expand_digit_limit=10)
    with pytest.raises(InputError, match="limit 10 digits"):
        Factorization.of(10**12).to_int()


def test_factorization_exact_comparison_without_expansion() -> None:
    a = Factorization.from_dict({2: 10**6})
    b = Factorization.from_dict({3: 630_930})  # 3^630930 is just above 2^10^6
    c = Factorization.from_dict({3: 630_929})

    assert a < b
    assert c < a
    assert a.compare(a) == 0
    assert sorted([b, a, c]) == [c, a, b]
    assert Factorization.of(8) > 7
    assert Factorization.of(8) == Factorization.of(8)


def test_interval_sign_raises_for_zero() -> None:
    from mpmath import iv

    with pytest.raises(PrecisionError, match="within 256 bits"):
        interval_sign(lambda: iv.mpf(0), max_bits=256)


def test_factorization_orders_consistently_against_plain_integers() -> None:
    five = Factorization.of(5)

    assert five == 5
    assert five <= 5
    assert five >= 5
    assert five != 6
    assert five < 6
    assert five <= 6
    assert not five >= 6
    assert five != 0
    assert Factorization.one() == 1


def test_factorization_hash_matches_expanded_integer() -> None:
    huge = Factorization.from_dict({2: 200, 3: 50})

    assert hash(Factorization.of(360)) == hash(360)
    assert hash(Factorization.one()) == hash(1)
    assert hash(huge) == hash(2**200 * 3**50)
    assert len({Factorization.of(12), 12, Factorization.from_dict({2: 2, 3: 1})}) == 1

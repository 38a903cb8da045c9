from __future__ import annotations

import itertools
import math
import random

import pytest
from mpmath import exp, log, mp, mpf, sqrt

from hauteur import configure
from hauteur.exceptions import CensusLimitError, InputError, PrecisionError
from hauteur.heightbound import evaluate_scenario
from hauteur.heightoracle import (
    SCHINZEL_CONSTANT,
    AlgebraicNumber,
    height_from_roots,
    is_root_of_unity,
    isolate_roots,
    northcott_census,
    weil_height,
)
from hauteur.scenario import load_packaged_scenario

GOLDEN = "x^2 - x - 1"
LEHMER = "x^10 + x^9 - x^7 - x^6 - x^5 - x^4 - x^3 + x + 1"
LEHMER_NUMBER = 1.1762808182599175


def test_parse_normalizes_sign_and_content() -> None:
    assert AlgebraicNumber.parse(GOLDEN).coeffs == (1, -1, -1)
    assert AlgebraicNumber.parse("-2x + 4").coeffs == (1, -2)
    assert AlgebraicNumber.parse("3*x^2 - 6").coeffs == (1, 0, -2)
    assert AlgebraicNumber.parse("x**3 + 2").degree == 3


@pytest.mark.parametrize(
    ("text", "message"),
    [
        ("x^2 + y", "only use the variable x"),
        ("x/2 + 1", "integer coefficients"),
        ("x^2 +", "Cannot parse"),
        ("7", "degree >= 1"),
    ],
)
def test_parse_rejects_bad_polynomials(text: str, message: str) -> None:
    with pytest.raises(InputError, match=message):
        AlgebraicNumber.parse(text)


def test_str_renders_ascii_polynomial() -> None:
    assert str(AlgebraicNumber.parse(GOLDEN)) == "x^2 - x - 1"


def test_golden_ratio_height_matches_schinzel_constant() -> None:
    estimate = weil_height(AlgebraicNumber.parse(GOLDEN), 128)

    assert abs(estimate.value - SCHINZEL_CONSTANT) < mpf(10) ** -15
    with mp.workprec(128):
        assert abs(estimate.value - log((1 + sqrt(5)) / 2) / 2) < mpf(10) ** -30
    assert estimate.error < mpf(2) ** -100
    assert float(estimate) == pytest.approx(0.240606, abs=1e-6)


def test_lehmer_number_height() -> None:
    estimate = weil_height(AlgebraicNumber.parse(LEHMER), 128)

    assert float(estimate.value) == pytest.approx(math.log(LEHMER_NUMBER) / 10, rel=1e-12)
    assert float(estimate.value) == pytest.approx(0.0162357, abs=1e-7)


@pytest.mark.parametrize("text", ["x - 2", "2x - 1", "x + 2"])
def test_rational_heights(text: str) -> None:
    assert float(weil_height(AlgebraicNumber.parse(text)).value) == pytest.approx(math.log(2))


def test_height_is_non_negative_on_roots_of_unity() -> None:
    for text in ("x^2 + 1", "x^2 + x + 1", "x^4 + 1"):
        estimate = weil_height(AlgebraicNumber.parse(text), 96)
        assert 0 <= estimate.value < mpf(2) ** -80


def test_height_from_roots_uses_leading_coefficient() -> None:
    assert float(height_from_roots([mpf(1) / 2, mpf(3)], leading=2)) == pytest.approx(
        math.log(6) / 2
    )


@pytest.mark.parametrize(
    ("text", "expected"),
    [
        ("x + 1", True),
        ("x - 1", True),
        ("x^2 + x + 1", True),
        ("x^4 + 1", True),
        ("x^4 - x^2 + 1", True),
        (GOLDEN, False),
        (LEHMER, False),
        ("2x + 1", False),
        ("x^2 - 2x + 1", False),
        ("x^2 + 3x + 1", False),
    ],
)
def test_is_root_of_unity(text: str, expected: bool) -> None:
    assert is_root_of_unity(AlgebraicNumber.parse(text)) is expected


def test_irreducibility_screen() -> None:
    assert AlgebraicNumber.parse(GOLDEN).passes_irreducibility_screen()
    assert not AlgebraicNumber.parse("x^2 - 1").passes_irreducibility_screen()
    assert not AlgebraicNumber.parse("x^4 + x^3 + x + 1").passes_irreducibility_screen()
    assert not AlgebraicNumber.parse("x^4 - 2x^2 + 1").passes_irreducibility_screen()


def test_isolate_roots_encloses_every_root() -> None:
    enclosure = isolate_roots(AlgebraicNumber.parse("x^3 - 2"), 128)

    assert len(enclosure.roots) == 3
    assert all(radius < mpf(2) ** -100 for radius in enclosure.radii)


def test_isolate_roots_rejects_repeated_factors() -> None:
    with pytest.raises(InputError, match="repeated factor"):
        isolate_roots(AlgebraicNumber.parse("x^2 - 2x + 1"))


def test_isolate_roots_reports_precision_failure() -> None:
    configure(max_precision_bits=64)

    with pytest.raises(PrecisionError, match="within 64 bits") as excinfo:
        isolate_roots(AlgebraicNumber.parse(GOLDEN), 128)

    assert excinfo.value.achieved is None


def test_census_with_tiny_cap_finds_roots_of_unity() -> None:
    found = northcott_census(2, 0.01)

    assert [number.coeffs for number in found] == [
        (1, -1),
        (1, 1),
        (1, -1, 1),
        (1, 0, 1),
        (1, 1, 1),
    ]


def test_census_degree_one_up_to_ln2() -> None:
    found = northcott_census(1, math.log(2) + 1e-9)

    assert [number.coeffs for number in found] == [
        (1, -2),
        (1, -1),
        (1, 1),
        (1, 2),
        (2, -1),
        (2, 1),
    ]


def test_census_limits() -> None:
    with pytest.raises(CensusLimitError, match="max_degree"):
        northcott_census(5, 0.1)
    with pytest.raises(CensusLimitError, match="height_cap"):
        northcott_census(2, 2.0)
    configure(census_max_candidates=10)
    with pytest.raises(CensusLimitError, match="limit 10"):
        northcott_census(2, 0.5)


@pytest.mark.parametrize("text", ["x^2 - 3x + 2", "x^2 - 1", "x^2 - 2x + 1", "x^4 + x^3 + x + 1"])
def test_weil_height_rejects_reducible_polynomials(text: str) -> None:
    with pytest.raises(InputError, match="reducible"):
        weil_height(AlgebraicNumber.parse(text))


@pytest.mark.parametrize("text", [GOLDEN, "x^3 - 2", LEHMER, "x^4 - 10x^2 + 1"])
@pytest.mark.parametrize("power", [2, 3, 5])
def test_power_rule_on_raised_roots(text: str, power: int) -> None:
    number = AlgebraicNumber.parse(text)
    enclosure = isolate_roots(number, 128)

    with mp.workprec(enclosure.precision):
        base = height_from_roots(enclosure.roots)
        raised = height_from_roots(z**power for z in enclosure.roots)
        assert abs(raised - power * base) < mpf(10) ** -9


@pytest.mark.parametrize(
    ("text", "power", "image"),
    [
        (GOLDEN, 2, "x^2 - 3x + 1"),
        (GOLDEN, 3, "x^2 - 4x - 1"),
        (GOLDEN, 5, "x^2 - 11x - 1"),
        (GOLDEN, -1, "x^2 + x - 1"),
        ("x^3 - 2", 2, "x^3 - 4"),
        ("x^3 - 2", 3, "x - 2"),
        ("x^3 - 2", 5, "x^3 - 32"),
    ],
)
def test_power_rule_on_minimal_polynomials(text: str, power: int, image: str) -> None:
    base = weil_height(AlgebraicNumber.parse(text), 96).value
    raised = weil_height(AlgebraicNumber.parse(image), 96).value

    assert abs(raised - abs(power) * base) < mpf(10) ** -20


def test_height_is_symmetric_in_the_roots() -> None:
    rng = random.Random(11)
    for text in ("x^3 - 2", "2x^3 - x + 5", LEHMER):
        number = AlgebraicNumber.parse(text)
        enclosure = isolate_roots(number, 128)
        with mp.workprec(enclosure.precision):
            reference = height_from_roots(enclosure.roots, number.leading)
            roots = list(enclosure.roots)
            for _ in range(6):
                rng.shuffle(roots)
                shuffled = height_from_roots(roots, number.leading)
                assert abs(shuffled - reference) < mpf(2) ** -100


def test_zero_height_exactly_on_roots_of_unity() -> None:
    checked = 0
    for degree in (1, 2, 3):
        tails = itertools.product(range(-2, 3), repeat=degree)
        for leading, tail in itertools.product((1, 2), tails):
            coeffs = (leading, *tail)
            if coeffs[-1] == 0 or math.gcd(*coeffs) != 1:
                continue
            number = AlgebraicNumber(coeffs)
            if not number.passes_irreducibility_screen():
                continue
            vanishes = weil_height(number, 96).value < mpf(2) ** -60
            assert vanishes is is_root_of_unity(number), str(number)
            checked += 1
    assert checked > 50


def test_quadratic_integers_respect_the_quadratic_tower_bound() -> None:
    bound = exp(evaluate_scenario(load_packaged_scenario("ex3_1")).ln_bound)
    squarefree = [
        d for d in range(-30, 31) if d not in (0, 1) and all(d % (q * q) for q in (2, 3, 5))
    ]
    rng = random.Random(23)
    for _ in range(100):
        d = rng.choice(squarefree)
        a = rng.randint(-20, 20)
        b = rng.randint(1, 20)
        # a + b sqrt(d)
        number = AlgebraicNumber((1, -2 * a, a * a - d * b * b))
        assert is_root_of_unity(number) or weil_height(number).value >= bound


def test_census_is_stable_across_precision_levels() -> None:
    low = northcott_census(2, 0.5, precision_bits=64)
    high = northcott_census(2, 0.5, precision_bits=128)

    assert [number.coeffs for number in low] == [number.coeffs for number in high]
    assert (1, -1, -1) in [number.coeffs for number in low]

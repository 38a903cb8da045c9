from __future__ import annotations

from fractions import Fraction

import pytest

from hauteur.density import DensityQuery, conjecture_gap, natural_density
from hauteur.exceptions import InputError


@pytest.mark.parametrize(
    ("p", "n", "kind", "expected"),
    [
        (3, 2, "inert", Fraction(3, 8)),
        (3, 3, "inert", Fraction(1, 5)),
        (3, 4, "inert", Fraction(27, 172)),
        (3, 5, "inert", Fraction(81, 665)),
        (5, 2, "inert", Fraction(5, 12)),
        (5, 3, "inert", Fraction(10, 39)),
        (5, 4, "inert", Fraction(125, 644)),
        (5, 5, "inert", Fraction(125, 811)),
        (7, 2, "inert", Fraction(7, 16)),
        (7, 3, "inert", Fraction(7, 25)),
        (7, 4, "inert", Fraction(343, 1628)),
        (7, 5, "inert", Fraction(2401, 14285)),
        (3, 2, "totally_ramified", Fraction(1, 4)),
        (3, 3, "totally_ramified", Fraction(1, 10)),
    ],
)
def test_natural_density_values(p: int, n: int, kind: str, expected: Fraction) -> None:
    assert natural_density(DensityQuery(p, n, kind)) == expected  # type: ignore[arg-type]


def test_cubic_gap_closed_form() -> None:
    for p in (3, 5, 7, 11, 101):
        assert conjecture_gap(p, 3) == Fraction(p + 1, 3 * (p**2 + 1))


def test_inert_density_tends_to_one_over_n() -> None:
    for n in (2, 3, 4, 5):
        gaps = [conjecture_gap(p, n) for p in (3, 11, 101, 1009, 1000003)]
        assert all(gap > 0 for gap in gaps)
        assert gaps == sorted(gaps, reverse=True)
        assert abs(n * natural_density(DensityQuery(1000003, n)) - 1) < Fraction(3, 10**6)


def test_density_query_validation() -> None:
    with pytest.raises(InputError, match="odd prime"):
        DensityQuery(2, 3)
    with pytest.raises(InputError, match="prime"):
        DensityQuery(9, 3)
    with pytest.raises(InputError, match="n must be one of"):
        DensityQuery(3, 6)
    with pytest.raises(InputError, match="only known for n = 2, 3"):
        DensityQuery(3, 4, "totally_ramified")
    with pytest.raises(InputError, match="Unknown density kind"):
        DensityQuery(3, 2, "split")  # type: ignore[arg-type]

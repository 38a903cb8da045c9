"""Krasner counts of extensions of p-adic fields.

Only counting happens here: a ``LocalField`` is a descriptor ``(p, [F : Q_p])`` with no element
arithmetic. Every power ``p**(eps(s) * D)`` is built from an exact integer exponent.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable
from dataclasses import dataclass

import polars as pl
from sympy import divisor_sigma

from ._internal.validation import validate_non_empty, validate_positive, validate_prime
from .config import get_config
from .exceptions import InputError

logger = logging.getLogger(__name__)

_INT64_MAX = 2**63 - 1


@dataclass(frozen=True)
class LocalField:
    """A finite extension ``F`` of ``Q_p`` known only through its absolute degree.

    Attributes:
        p: Residue characteristic.
        abs_degree: ``[F : Q_p]``.
    """

    p: int
    abs_degree: int = 1

    def __post_init__(self) -> None:
        """Validate the descriptor."""
        validate_prime(self.p, "p")
        validate_positive(self.abs_degree, "abs_degree")

    def unramified_shift(self, f: int) -> LocalField:
        """Return ``F{f}``, the unramified extension of degree ``f``."""
        validate_positive(f, "f")
        return LocalField(self.p, self.abs_degree * f)

    def __str__(self) -> str:
        """Render as ``Q_5`` or ``Q_5{2}``."""
        if self.abs_degree == 1:
            return f"Q_{self.p}"
        return f"Q_{self.p}{{{self.abs_degree}}}"


@dataclass(frozen=True, order=True)
class ExtensionProfile:
    """Ramification profile of a finite extension.

    Attributes:
        e: Ramification index.
        f: Inertia degree.
    """

    e: int
    f: int = 1

    def __post_init__(self) -> None:
        """Validate the profile."""
        validate_positive(self.e, "e")
        validate_positive(self.f, "f")

    @property
    def degree(self) -> int:
        """Local degree ``e * f``."""
        return self.e * self.f

    def is_wild(self, p: int) -> bool:
        """Return whether the profile is wildly ramified over residue characteristic ``p``."""
        return self.e % p == 0


def _split_degree(d: int, p: int) -> tuple[int, int]:
    """Write ``d = h * p**m`` with ``p`` not dividing ``h``."""
    m = 0
    while d % p == 0:
        d //= p
        m += 1
    return d, m


def epsilon_exponent(s: int, big_d: int, p: int) -> int:
    """Return ``eps(s) * D = sum_{i=1..s} D / p**i`` as an exact integer.

    Args:
        s: Index ``s >= 0``; ``eps(0) = 0``.
        big_d: ``D = d * [F : Q_p]``.
        p: Residue characteristic.

    Raises:
        InputError: If some ``p**i`` with ``i <= s`` does not divide ``D``.
    """
    total = 0
    power = 1
    for i in range(1, s + 1):
        power *= p
        if big_d % power:
            raise InputError(f"p^{i} = {power} does not divide D = {big_d}")
        total += big_d // power
    return total


def _eps_power_step(s: int, big_d: int, p: int) -> int:
    """Return ``p**(eps(s) D) - p**(eps(s-1) D)`` with ``p**(eps(-1) D) = 0``."""
    current = p ** epsilon_exponent(s, big_d, p)
    if s == 0:
        return current
    return current - p ** epsilon_exponent(s - 1, big_d, p)


def count_extensions(field: LocalField, d: int) -> int:
    """Count the extensions of ``field`` of degree ``d`` (Krasner's formula).

    Args:
        field: Base field.
        d: Degree of the extensions.

    Returns:
        ``N_{F,d}``; equal to the divisor sum ``sigma(d)`` when ``p`` does not divide ``d``.

    Example:
        >>> count_extensions(LocalField(5), 10)
        1818
    """
    validate_positive(d, "d")
    p = field.p
    h, m = _split_degree(d, p)
    big_d = d * field.abs_degree
    total = 0
    for s in range(m + 1):
        weight = (p ** (m + s + 1) - p ** (2 * s)) // (p - 1)
        total += weight * _eps_power_step(s, big_d, p)
    return int(divisor_sigma(h)) * total


def count_totally_ramified(field: LocalField, d: int) -> int:
    """Count the totally ramified extensions of ``field`` of degree ``d``.

    Returns:
        ``N^(r)_{F,d}``; equal to ``d`` when ``p`` does not divide ``d``.
    """
    validate_positive(d, "d")
    p = field.p
    _, m = _split_degree(d, p)
    big_d = d * field.abs_degree
    return d * sum(p**s * _eps_power_step(s, big_d, p) for s in range(m + 1))


def count_with_profile(field: LocalField, e: int, f: int) -> int:
    """Count extensions of ``field`` with ramification index ``e`` and inertia degree ``f``.

    Such an extension is a totally ramified extension of degree ``e`` of the unramified shift
    ``F{f}``.
    """
    validate_positive(e, "e")
    return count_totally_ramified(field.unramified_shift(f), e)


def bound_N_e(field: LocalField, e: int, f_set: Iterable[int]) -> int:
    """Upper bound for the number of distinct completions with ramification index ``e``.

    Args:
        field: Base field.
        e: Ramification index.
        f_set: The inertia degrees that occur with ``e`` (treated as a set).

    Raises:
        InputError: If ``f_set`` is empty.

    Example:
        >>> bound_N_e(LocalField(5), 5, {1, 2})
        710
    """
    degrees = sorted(set(f_set))
    validate_non_empty(degrees, "f_set")
    return sum(count_with_profile(field, e, f) for f in degrees)


def enumerate_profiles(field: LocalField, dmax: int) -> list[tuple[ExtensionProfile, int]]:
    """List every profile ``(e, f)`` with ``e * f <= dmax`` and its Krasner count.

    Args:
        field: Base field.
        dmax: Largest local degree.

    Returns:
        ``(profile, count)`` pairs sorted by ``(e * f, e)``.

    Raises:
        InputError: If ``dmax`` exceeds ``Config.profile_dmax_limit``.
    """
    validate_positive(dmax, "dmax")
    limit = get_config().profile_dmax_limit
    if dmax > limit:
        raise InputError(f"dmax={dmax} exceeds the profile enumeration limit {limit}")
    profiles = [
        ExtensionProfile(e, degree // e)
        for degree in range(1, dmax + 1)
        for e in range(1, degree + 1)
        if degree % e == 0
    ]
    logger.debug("Enumerating %d profiles of %s up to degree %d", len(profiles), field, dmax)
    return [(profile, count_with_profile(field, profile.e, profile.f)) for profile in profiles]


def profiles_frame(field: LocalField, dmax: int) -> pl.DataFrame:
    """Return ``enumerate_profiles`` as a table.

    Columns are ``degree``, ``e``, ``f``, ``wild`` and ``count``. ``count`` is ``Int64`` when
    every count fits and falls back to decimal strings otherwise.
    """
    rows = enumerate_profiles(field, dmax)
    counts = [count for _, count in rows]
    count_column: pl.Series
    if all(count <= _INT64_MAX for count in counts):
        count_column = pl.Series("count", counts, dtype=pl.Int64)
    else:
        logger.info("Profile counts overflow Int64 for %s, dmax=%d", field, dmax)
        count_column = pl.Series("count", [str(count) for count in counts], dtype=pl.Utf8)
    return pl.DataFrame(
        {
            "degree": pl.Series([profile.degree for profile, _ in rows], dtype=pl.Int64),
            "e": pl.Series([profile.e for profile, _ in rows], dtype=pl.Int64),
            "f": pl.Series([profile.f for profile, _ in rows], dtype=pl.Int64),
            "wild": pl.Series([profile.is_wild(field.p) for profile, _ in rows], dtype=pl.Boolean),
        }
    ).with_columns(count_column)

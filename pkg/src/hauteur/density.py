"""Natural densities of number fields of degree ``n`` with prescribed behaviour at ``p``.

Closed forms (Gauss for ``n = 2``, Davenport-Heilbronn for ``n = 3``, Bhargava for
``n = 4, 5``) evaluated in exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ._internal.validation import validate_prime
from .exceptions import InputError
from .types import DensityKind, ExactRational

SUPPORTED_DEGREES = (2, 3, 4, 5)


@dataclass(frozen=True)
class DensityQuery:
    """A density question ``d(I(p, n))`` or ``d(R(p, n))``.

    Attributes:
        p: Odd prime.
        n: Degree in 2..5.
        kind: Inert or totally ramified; totally ramified only for ``n`` in {2, 3}.
    """

    p: int
    n: int
    kind: DensityKind = "inert"

    def __post_init__(self) -> None:
        """Validate the query."""
        validate_prime(self.p, "p")
        if self.p == 2:
            raise InputError("Density formulas need an odd prime, got p=2")
        if self.n not in SUPPORTED_DEGREES:
            raise InputError(f"n must be one of {SUPPORTED_DEGREES}, got {self.n}")
        if self.kind not in ("inert", "totally_ramified"):
            raise InputError(f"Unknown density kind {self.kind!r}")
        if self.kind == "totally_ramified" and self.n not in (2, 3):
            raise InputError(f"Totally ramified density is only known for n = 2, 3, got n={self.n}")


def natural_density(q: DensityQuery) -> ExactRational:
    """Return the natural density for the query.

    Example:
        >>> natural_density(DensityQuery(3, 2, "inert"))
        Fraction(3, 8)
    """
    p = q.p
    if q.kind == "totally_ramified":
        if q.n == 2:
            return Fraction(1, p + 1)
        return Fraction(1, p**2 + 1)
    if q.n == 2:
        return Fraction(p, 2 * (p + 1))
    if q.n == 3:
        return Fraction(p * (p - 1), 3 * (p**2 + 1))
    if q.n == 4:
        return Fraction(1, 4) * (1 - Fraction((p + 1) ** 2, p**3 + p**2 + 2 * p + 1))
    return Fraction(1, 5) * (
        1 - Fraction((p + 1) * (p**2 + p + 1), p**4 + p**3 + 2 * p**2 + 2 * p + 1)
    )


def conjecture_gap(p: int, n: int) -> ExactRational:
    """Return ``1/n - d(I(p, n))``, which tends to zero as ``p`` grows."""
    return Fraction(1, n) - natural_density(DensityQuery(p, n, "inert"))

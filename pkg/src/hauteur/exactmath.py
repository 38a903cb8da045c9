"""Exact integer and rational primitives for the bound engine.

Every integer that can outgrow a machine word by hundreds of digits (compositum bounds reach
10**1941) is carried as a ``Factorization``: a canonical prime -> exponent map. Expansion to a
flat ``int`` is explicit and guarded by ``Config.expand_digit_limit``. Logarithmic views are
computed with ``mpmath`` and exact comparisons with ``mpmath.iv`` interval arithmetic.
"""

from __future__ import annotations

import logging
import math
import re
import sys
from collections import Counter
from collections.abc import Callable, Iterable, Mapping
from dataclasses import dataclass
from functools import reduce, total_ordering
from typing import Any

from mpmath import fsum, iv, log, mpf
from sympy import factorint, isprime

from ._internal.precision import interval_precision, working_precision
from ._internal.validation import (
    validate_all_positive,
    validate_non_empty,
    validate_non_negative,
    validate_positive,
    validate_prime,
)
from .config import get_config
from .exceptions import InputError, PrecisionError

logger = logging.getLogger(__name__)

_FACTOR_PATTERN = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+))?\s*$")


def interval_sign(
    build: Callable[[], Any], *, start_bits: int = 64, max_bits: int | None = None
) -> int:
    """Decide the sign of a non-zero real quantity with interval arithmetic.

    ``build`` is re-evaluated under ``mpmath.iv`` at doubling precision until the resulting
    interval excludes zero.

    Args:
        build: Zero-argument callable returning an ``iv.mpf`` enclosure of the quantity.
        start_bits: Initial interval precision.
        max_bits: Precision ceiling (defaults to ``Config.max_precision_bits``).

    Returns:
        1 if the quantity is positive, -1 if negative.

    Raises:
        PrecisionError: If the enclosure still contains zero at the ceiling (the quantity is
            zero or too close to it).
    """
    limit = max_bits if max_bits is not None else get_config().max_precision_bits
    bits = start_bits
    while bits <= limit:
        with interval_precision(bits):
            value = build()
            if value > 0:
                return 1
            if value < 0:
                return -1
        logger.debug("Interval sign undecided at %d bits, doubling", bits)
        bits *= 2
    raise PrecisionError(f"Could not separate quantity from zero within {limit} bits")


@total_ordering
@dataclass(frozen=True)
class Factorization:
    """A positive integer in factored form.

    Attributes:
        factors: Sorted ``(prime, exponent)`` pairs; every exponent is at least one and the
            empty tuple encodes 1.
    """

    factors: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        """Check the canonical form (sorted distinct primes, positive exponents)."""
        previous = 1
        for prime, exponent in self.factors:
            if prime <= previous:
                raise InputError(
                    f"Factorization primes must be strictly increasing: {self.factors}"
                )
            if exponent < 1:
                raise InputError(f"Factorization exponents must be >= 1: {self.factors}")
            previous = prime

    # -- construction -------------------------------------------------------------------

    @classmethod
    def one(cls) -> Factorization:
        """Return the factorization of 1."""
        return cls(())

    @classmethod
    def of(cls, n: int) -> Factorization:
        """Factor a positive integer.

        Raises:
            InputError: If ``n`` is not a positive integer.
        """
        validate_positive(n, "n")
        return cls(tuple(sorted(factorint(n).items())))

    @classmethod
    def from_dict(cls, mapping: Mapping[int, int]) -> Factorization:
        """Build a factorization from a prime -> exponent mapping.

        Zero exponents are dropped.

        Raises:
            InputError: If a key is not prime or an exponent is negative.
        """
        items = []
        for prime, exponent in mapping.items():
            validate_prime(prime, "factor")
            validate_non_negative(exponent, f"exponent of {prime}")
            if exponent:
                items.append((prime, exponent))
        return cls(tuple(sorted(items)))

    @classmethod
    def _from_counter(cls, counter: Mapping[int, int]) -> Factorization:
        """Build from a counter whose keys are already known to be prime."""
        return cls(tuple(sorted((q, k) for q, k in counter.items() if k)))

    @classmethod
    def product(cls, parts: Iterable[Factorization | int]) -> Factorization:
        """Multiply an iterable of factored or plain positive integers."""
        return reduce(lambda acc, part: acc * part, parts, cls.one())

    @classmethod
    def parse(cls, text: str) -> Factorization:
        """Parse a rendering such as ``"2^2 * 3^21 * 5"`` (``"1"`` is the empty product).

        Raises:
            InputError: If the text is not a product of prime powers.
        """
        stripped = text.strip()
        if stripped == "1":
            return cls.one()
        counter: Counter[int] = Counter()
        for chunk in stripped.split("*"):
            match = _FACTOR_PATTERN.match(chunk)
            if match is None:
                raise InputError(f"Cannot parse factor {chunk!r} in {text!r}")
            prime = int(match.group(1))
            exponent = int(match.group(2)) if match.group(2) else 1
            if not isprime(prime):
                raise InputError(f"Factor {prime} in {text!r} is not prime")
            counter[prime] += exponent
        return cls.from_dict(counter)

    # -- views --------------------------------------------------------------------------

    def as_dict(self) -> dict[int, int]:
        """Return the prime -> exponent map."""
        return dict(self.factors)

    def valuation(self, q: int) -> int:
        """Return the exponent of ``q`` (0 when absent)."""
        return self.as_dict().get(q, 0)

    def is_one(self) -> bool:
        """Return whether this is the empty product."""
        return not self.factors

    def ln(self, bits: int | None = None) -> mpf:
        """Natural logarithm as an ``mpmath.mpf``.

        Args:
            bits: Working precision; defaults to ``Config.precision_bits``.
        """
        prec = bits if bits is not None else get_config().precision_bits
        with working_precision(prec + 16):
            return +fsum(mpf(exponent) * log(prime) for prime, exponent in self.factors)

    def log10(self, bits: int | None = None) -> mpf:
        """Decimal logarithm as an ``mpmath.mpf``."""
        prec = bits if bits is not None else get_config().precision_bits
        with working_precision(prec + 16):
            return self.ln(prec) / log(10)

    def estimated_digits(self) -> int:
        """Number of decimal digits, exact up to rounding of a 64-bit logarithm."""
        if self.is_one():
            return 1
        return int(math.floor(float(self.log10(64)))) + 1

    def to_int(self, digit_limit: int | None = None) -> int:
        """Expand to a flat integer.

        Args:
            digit_limit: Maximum decimal digits; defaults to ``Config.expand_digit_limit``.

        Raises:
            InputError: If the expansion would exceed the digit limit.
        """
        limit = digit_limit if digit_limit is not None else get_config().expand_digit_limit
        digits = self.estimated_digits()
        if digits > limit:
            raise InputError(
                f"Refusing to expand a {digits}-digit factorization (limit {limit} digits)"
            )
        return math.prod(prime**exponent for prime, exponent in self.factors)

    # -- arithmetic ---------------------------------------------------------------------

    def _coerce(self, other: Factorization | int) -> Factorization:
        if isinstance(other, Factorization):
            return other
        return Factorization.of(other)

    def __mul__(self, other: Factorization | int) -> Factorization:
        """Multiply exactly."""
        counter = Counter(self.as_dict())
        counter.update(self._coerce(other).as_dict())
        return Factorization._from_counter(counter)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Factorization:
        """Raise to a non-negative integer power."""
        validate_non_negative(k, "exponent")
        return Factorization._from_counter({q: e * k for q, e in self.factors})

    def divide_exact(self, other: Factorization | int) -> Factorization:
        """Divide exactly.

        Raises:
            InputError: If ``other`` does not divide ``self``.
        """
        counter = self.as_dict()
        for prime, exponent in self._coerce(other).factors:
            remaining = counter.get(prime, 0) - exponent
            if remaining < 0:
                raise InputError(f"{other} does not divide {self}")
            counter[prime] = remaining
        return Factorization._from_counter(counter)

    def divides(self, other: Factorization | int) -> bool:
        """Return whether ``self`` divides ``other``."""
        target = self._coerce(other).as_dict()
        return all(target.get(q, 0) >= e for q, e in self.factors)

    def lcm(self, other: Factorization | int) -> Factorization:
        """Least common multiple (pointwise maximum of exponents)."""
        counter = self.as_dict()
        for q, e in self._coerce(other).factors:
            counter[q] = max(counter.get(q, 0), e)
        return Factorization._from_counter(counter)

    # -- ordering -----------------------------------------------------------------------

    def compare(self, other: Factorization | int) -> int:
        """Compare exactly without expanding.

        Returns:
            -1, 0 or 1 as ``self`` is smaller than, equal to or larger than ``other``.
        """
        theirs = self._coerce(other)
        if self == theirs:
            return 0
        diff = Counter(self.as_dict())
        diff.subtract(theirs.as_dict())
        terms = [(q, k) for q, k in diff.items() if k]

        def build() -> Any:
            return sum((iv.mpf(k) * iv.ln(iv.mpf(q)) for q, k in terms), iv.mpf(0))

        return interval_sign(build)

    def __eq__(self, other: object) -> bool:
        """Exact equality, also against plain positive integers."""
        if isinstance(other, Factorization):
            return self.factors == other.factors
        if isinstance(other, int) and not isinstance(other, bool):
            return other > 0 and self.factors == Factorization.of(other).factors
        return NotImplemented

    def __hash__(self) -> int:
        """Hash of the expanded integer, computed modulo the int hash modulus."""
        modulus = sys.hash_info.modulus
        value = 1
        for prime, exponent in self.factors:
            value = value * pow(prime, exponent, modulus) % modulus
        return value

    def __lt__(self, other: object) -> bool:
        """Exact less-than."""
        if not isinstance(other, (Factorization, int)):
            return NotImplemented
        return self.compare(other) < 0

    def __str__(self) -> str:
        """Render as ``"2^2 * 3^21 * 5"`` with primes ascending."""
        if self.is_one():
            return "1"
        return " * ".join(
            str(prime) if exponent == 1 else f"{prime}^{exponent}"
            for prime, exponent in self.factors
        )


def valuation(n: int, q: int) -> int:
    """Return the exponent of the prime ``q`` in ``n``.

    Raises:
        InputError: If ``n`` is not positive or ``q`` is not prime.

    Example:
        >>> valuation(8, 2)
        3
    """
    validate_positive(n, "n")
    validate_prime(q, "q")
    count = 0
    while n % q == 0:
        n //= q
        count += 1
    return count


def lcm_list(values: Iterable[int]) -> int:
    """Least common multiple of a non-empty list of positive integers.

    Raises:
        InputError: If the list is empty or holds a non-positive value.
    """
    items = list(values)
    validate_non_empty(items, "values")
    validate_all_positive(items, "values")
    return math.lcm(*items)


def a_r(lambda_set: Iterable[int], q: int) -> int:
    """Return ``sum(v_q(e)) - max(v_q(e))`` over a set of ramification indices.

    Only distinct values count: ``lambda_set`` is treated as a set.

    Raises:
        InputError: If the set is empty or ``q`` is not prime.
    """
    distinct = set(lambda_set)
    validate_non_empty(distinct, "lambda_set")
    validate_prime(q, "q")
    orders = [valuation(e, q) for e in distinct]
    return sum(orders) - max(orders)


def gcd_of_products(a: Iterable[int]) -> int:
    """Return the gcd over ``j`` of the products of all ``a_i`` with ``i != j``.

    Raises:
        InputError: If fewer than two values are given or a value is not positive.
    """
    values = list(a)
    if len(values) < 2:
        raise InputError(f"gcd_of_products needs at least two values, got {len(values)}")
    validate_all_positive(values, "a")
    prefix = [1]
    for value in values:
        prefix.append(prefix[-1] * value)
    suffix = [1]
    for value in reversed(values):
        suffix.append(suffix[-1] * value)
    suffix.reverse()
    result = 0
    for j in range(len(values)):
        result = math.gcd(result, prefix[j] * suffix[j + 1])
    return result


def gcd_of_products_chain(a: Iterable[int]) -> int:
    """Telescoped form ``prod_{i<l} gcd(lcm(a_1..a_i), a_{i+1})`` of ``gcd_of_products``.

    Raises:
        InputError: If fewer than two values are given or a value is not positive.
    """
    values = list(a)
    if len(values) < 2:
        raise InputError(f"gcd_of_products needs at least two values, got {len(values)}")
    validate_all_positive(values, "a")
    running_lcm = values[0]
    result = 1
    for value in values[1:]:
        result *= math.gcd(running_lcm, value)
        running_lcm = math.lcm(running_lcm, value)
    return result

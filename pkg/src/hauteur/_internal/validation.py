"""Validation utilities for arguments of the number-theoretic kernels.

This module provides the precondition checks shared by every public operation:
positivity, primality and non-empty collections. All checks raise ``InputError``.
"""

from __future__ import annotations

from collections.abc import Collection

from sympy import isprime

from ..exceptions import InputError


def validate_positive(value: int, name: str) -> None:
    """Validate that an integer argument is at least one.

    Args:
        value: Value to check.
        name: Argument name used in the error message.

    Raises:
        InputError: If the value is not an int or is smaller than one.
    """
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError(f"{name} must be an integer, got {value!r}")
    if value < 1:
        raise InputError(f"{name} must be a positive integer, got {value}")


def validate_non_negative(value: int, name: str) -> None:
    """Validate that an integer argument is at least zero.

    Raises:
        InputError: If the value is not an int or is negative.
    """
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError(f"{name} must be an integer, got {value!r}")
    if value < 0:
        raise InputError(f"{name} must be non-negative, got {value}")


def validate_prime(value: int, name: str = "p") -> None:
    """Validate that an integer argument is prime.

    ``sympy.isprime`` is deterministic below 2**64 and runs a strong BPSW test above.

    Raises:
        InputError: If the value is not a prime integer.
    """
    validate_positive(value, name)
    if not isprime(value):
        raise InputError(f"{name} must be prime, got {value}")


def validate_non_empty(values: Collection[object], name: str) -> None:
    """Validate that a collection argument is non-empty.

    Raises:
        InputError: If the collection is empty.
    """
    if len(values) == 0:
        raise InputError(f"{name} must be non-empty")


def validate_all_positive(values: Collection[int], name: str) -> None:
    """Validate that every element of a collection is a positive integer.

    Raises:
        InputError: If any element is not a positive integer.
    """
    for value in values:
        validate_positive(value, f"element of {name}")

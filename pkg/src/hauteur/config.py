"""Configuration management for hauteur.

This module provides a global configuration system for numeric precision and the size
guards that keep astronomically large bounds in factored form.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace

from .exceptions import InputError

PRECISION_ENV_VAR = "HAUTEUR_PRECISION_BITS"


@dataclass(frozen=True)
class Config:
    """Global configuration for the hauteur package.

    Attributes:
        precision_bits: Working precision (bits) for the height oracle and log-space bounds.
        max_precision_bits: Ceiling for precision doubling before a PrecisionError is raised.
        expand_digit_limit: Largest number of decimal digits a Factorization may expand to.
        profile_dmax_limit: Largest degree accepted by ``krasner.enumerate_profiles``.
        census_max_candidates: Largest number of polynomials a Northcott census may scan.
        log10_digits: Significant digits of log10 renderings in reports.
        decimal_digits: Significant digits of decimal renderings in reports.
    """

    precision_bits: int = 128
    max_precision_bits: int = 8192
    expand_digit_limit: int = 10**6
    profile_dmax_limit: int = 24
    census_max_candidates: int = 2_000_000
    log10_digits: int = 6
    decimal_digits: int = 15


_CONFIG = Config()


def get_config() -> Config:
    """Get the current global configuration.

    Returns:
        The current Config instance.
    """
    return _CONFIG


def configure(**kwargs: object) -> Config:
    """Update the global configuration.

    Args:
        **kwargs: Configuration parameters to update (see Config attributes).

    Returns:
        The updated Config instance.

    Example:
        >>> import hauteur
        >>> hauteur.configure(precision_bits=256)
    """
    global _CONFIG  # noqa: PLW0603
    _CONFIG = replace(_CONFIG, **kwargs)  # type: ignore[arg-type]
    return _CONFIG


def resolve_precision_bits(bits: int | None = None) -> int:
    """Resolve the oracle precision from explicit arg, env var, or configuration.

    Args:
        bits: Explicit precision in bits; wins over everything else when given.

    Returns:
        A positive number of bits.

    Raises:
        InputError: If the explicit value or the environment variable is not a positive integer.
    """
    if bits is not None:
        if bits < 1:
            raise InputError(f"precision_bits must be positive, got {bits}")
        return bits
    env_bits = os.getenv(PRECISION_ENV_VAR)
    if env_bits:
        try:
            resolved = int(env_bits.strip())
        except ValueError as exc:
            raise InputError(f"{PRECISION_ENV_VAR} must be an integer, got {env_bits!r}") from exc
        if resolved < 1:
            raise InputError(f"{PRECISION_ENV_VAR} must be positive, got {resolved}")
        return resolved
    return get_config().precision_bits

"""Exception hierarchy for hauteur."""

from __future__ import annotations


class HauteurError(Exception):
    """Base class for every error raised by hauteur."""


class InputError(HauteurError, ValueError):
    """An argument or input document violates a precondition."""


class ScenarioError(InputError):
    """A scenario document is malformed or describes an invalid tower scenario."""


class CensusLimitError(InputError):
    """A Northcott census request exceeds the desk-scale limits."""


class NonPositiveBoundError(HauteurError, ArithmeticError):
    """The numerator of the explicit height bound is not positive."""


class PrecisionError(HauteurError, RuntimeError):
    """A numeric kernel could not reach the requested accuracy.

    Attributes:
        achieved: Best error bound reached before giving up, when known.
    """

    def __init__(self, message: str, achieved: float | None = None) -> None:
        """Initialize the error.

        Args:
            message: Human-readable description.
            achieved: Best error bound reached, if any.
        """
        super().__init__(message)
        self.achieved = achieved

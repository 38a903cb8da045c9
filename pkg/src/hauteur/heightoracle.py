"""Numerical Weil heights of algebraic numbers given by integer minimal polynomials.

The height is computed from the Mahler measure,
``h(alpha) = (ln|a_d| + sum ln max(1, |alpha_i|)) / d``. Roots come from ``mpmath.polyroots``
and are certified with Weierstrass inclusion disks; precision doubles until the requested
error bound is met.
"""

from __future__ import annotations

import itertools
import logging
import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from tokenize import TokenError

from mpmath import fabs, log, mp, mpf, polyroots, polyval
from sympy import Poly, Symbol, cyclotomic_poly, totient
from sympy.parsing.sympy_parser import (
    convert_xor,
    implicit_multiplication_application,
    parse_expr,
    standard_transformations,
)
from sympy.polys.polyerrors import PolynomialError

from ._internal.precision import working_precision
from .config import get_config
from .exceptions import CensusLimitError, InputError, PrecisionError

logger = logging.getLogger(__name__)

SCHINZEL_CONSTANT = mpf("0.24060591252980172374887945671218")
"""Height of the golden ratio, ``ln((1 + sqrt 5) / 2) / 2``."""

MAX_CENSUS_DEGREE = 4
MAX_CENSUS_CAP = math.log(3)

_X = Symbol("x")
_TRANSFORMATIONS = (*standard_transformations, convert_xor, implicit_multiplication_application)


@dataclass(frozen=True)
class AlgebraicNumber:
    """An algebraic number given by its minimal polynomial over ``Z``.

    Attributes:
        coeffs: Coefficients from the leading one down to the constant term. They are stored
            primitive with a positive leading coefficient.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        """Normalize sign and content."""
        values = [int(c) for c in self.coeffs]
        if len(values) < 2:
            raise InputError(f"Polynomial must have degree >= 1, got coefficients {values}")
        if values[0] == 0:
            raise InputError(f"Leading coefficient must be nonzero, got {values}")
        content = math.gcd(*values)
        sign = -1 if values[0] < 0 else 1
        object.__setattr__(self, "coeffs", tuple(sign * c // content for c in values))

    @classmethod
    def parse(cls, text: str) -> AlgebraicNumber:
        """Parse a plain ASCII polynomial in ``x`` such as ``"x^2 - x - 1"``.

        Raises:
            InputError: If the text is not a univariate integer polynomial in ``x``.
        """
        try:
            expr = parse_expr(text, transformations=_TRANSFORMATIONS, local_dict={"x": _X})
        except (SyntaxError, TokenError, TypeError, ValueError) as exc:
            raise InputError(f"Cannot parse polynomial {text!r}: {exc}") from exc
        extra = expr.free_symbols - {_X}
        if extra:
            raise InputError(f"Polynomial {text!r} must only use the variable x, found {extra}")
        try:
            poly = Poly(expr, _X)
        except PolynomialError as exc:
            raise InputError(f"{text!r} is not a polynomial in x") from exc
        if not poly.domain.is_ZZ:
            raise InputError(f"Polynomial {text!r} must have integer coefficients")
        return cls(tuple(int(c) for c in poly.all_coeffs()))

    @property
    def degree(self) -> int:
        """Degree of the minimal polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        """Leading coefficient (positive)."""
        return self.coeffs[0]

    def as_poly(self) -> Poly:
        """Return the polynomial as a ``sympy.Poly`` in ``x``."""
        return Poly(list(self.coeffs), _X)

    def passes_irreducibility_screen(self) -> bool:
        """Cheap partial irreducibility check.

        Rejects polynomials with a repeated factor, a rational root or a cyclotomic factor of
        smaller degree.
        Passing the screen does not prove irreducibility.
        """
        if self.degree == 1:
            return True
        poly = self.as_poly()
        if not poly.is_sqf or poly.ground_roots():
            return False
        for n in range(1, 2 * (self.degree - 1) ** 2 + 3):
            if totient(n) < self.degree and poly.rem(Poly(cyclotomic_poly(n, _X), _X)).is_zero:
                return False
        return True

    def __str__(self) -> str:
        """Render as a polynomial in ``x``."""
        return str(self.as_poly().as_expr()).replace("**", "^")


@dataclass(frozen=True)
class RootEnclosure:
    """Approximate roots with certified inclusion radii.

    Attributes:
        roots: Approximations of all complex roots.
        radii: Radius of a disk around each approximation containing exactly one root.
        precision: Working precision in bits.
    """

    roots: tuple[object, ...]
    radii: tuple[mpf, ...]
    precision: int


@dataclass(frozen=True)
class HeightEstimate:
    """A Weil height with an absolute error bound.

    Attributes:
        value: Computed height.
        error: Certified bound on ``|value - h|``.
    """

    value: mpf
    error: mpf

    def __float__(self) -> float:
        """Return the value as a float."""
        return float(self.value)


def _weierstrass_radii(coeffs: Sequence[int], roots: Sequence[object]) -> list[mpf] | None:
    """Inclusion radii ``d |P(z_i)| / (|a_d| prod |z_i - z_j|)``; ``None`` on a collision."""
    d = len(roots)
    radii = []
    for i, z in enumerate(roots):
        denominator = mpf(abs(coeffs[0]))
        for j, w in enumerate(roots):
            if i != j:
                denominator *= fabs(z - w)
        if denominator == 0:
            return None
        radii.append(d * fabs(polyval(list(coeffs), z)) / denominator)
    return radii


def _disjoint(roots: Sequence[object], radii: Sequence[mpf]) -> bool:
    return all(
        fabs(roots[i] - roots[j]) > radii[i] + radii[j]
        for i in range(len(roots))
        for j in range(i + 1, len(roots))
    )


def isolate_roots(a: AlgebraicNumber, precision_bits: int | None = None) -> RootEnclosure:
    """Approximate every root of ``a``'s polynomial inside disjoint inclusion disks.

    The sum of the radii, divided by the degree, stays below ``2**(-precision_bits + 8)``.

    Raises:
        InputError: If the polynomial has a repeated factor.
        PrecisionError: If the target is not reached within ``Config.max_precision_bits``.
    """
    config = get_config()
    bits = precision_bits if precision_bits is not None else config.precision_bits
    target = mpf(2) ** (-bits + 8)
    coeffs = list(a.coeffs)
    d = a.degree
    if d == 1:
        with working_precision(bits + 32):
            root = -mpf(coeffs[1]) / coeffs[0]
        return RootEnclosure((root,), (mpf(0),), bits + 32)
    if not a.as_poly().is_sqf:
        raise InputError(f"{a} has a repeated factor; give a minimal polynomial")

    best: mpf | None = None
    prec = bits + 32
    while prec <= config.max_precision_bits:
        with working_precision(prec):
            try:
                roots = polyroots(coeffs, maxsteps=max(100, prec), extraprec=prec)
            except mp.NoConvergence:
                logger.debug("polyroots did not converge at %d bits", prec)
                prec *= 2
                continue
            radii = _weierstrass_radii(coeffs, roots)
            if radii is not None and _disjoint(roots, radii):
                spread = sum(radii) / d
                if spread <= target:
                    return RootEnclosure(tuple(roots), tuple(radii), prec)
                best = spread if best is None else min(best, spread)
        logger.debug("Root enclosures too wide at %d bits, doubling", prec)
        prec *= 2
    raise PrecisionError(
        f"Could not isolate the roots of {a} within {config.max_precision_bits} bits",
        achieved=float(best) if best is not None else None,
    )


def height_from_roots(roots: Iterable[object], leading: int = 1) -> mpf:
    """Return ``(ln|leading| + sum ln max(1, |z|)) / d`` at the current precision."""
    values = list(roots)
    total = log(abs(leading)) + sum((log(max(mpf(1), fabs(z))) for z in values), mpf(0))
    return total / len(values)


def weil_height(a: AlgebraicNumber, precision_bits: int | None = None) -> HeightEstimate:
    """Weil height of the algebraic number ``a`` with a certified error bound.

    Args:
        a: The algebraic number.
        precision_bits: Requested accuracy; the error bound is at most
            ``2**(-precision_bits + 8)``. Defaults to ``Config.precision_bits``.

    Raises:
        InputError: If the polynomial fails the irreducibility screen.
        PrecisionError: If root isolation fails.

    Example:
        >>> float(weil_height(AlgebraicNumber((1, -2))).value)
        0.6931471805599453
    """
    if not a.passes_irreducibility_screen():
        raise InputError(
            f"{a} is reducible (repeated factor, rational root or cyclotomic factor); "
            "give a minimal polynomial"
        )
    return _screened_height(a, precision_bits)


def _screened_height(a: AlgebraicNumber, precision_bits: int | None) -> HeightEstimate:
    bits = precision_bits if precision_bits is not None else get_config().precision_bits
    if a.degree == 1:
        with working_precision(bits + 32):
            value = log(max(abs(c) for c in a.coeffs))
        return HeightEstimate(value, mpf(2) ** (-bits))
    enclosure = isolate_roots(a, bits)
    with working_precision(enclosure.precision):
        value = height_from_roots(enclosure.roots, a.leading)
        error = sum(enclosure.radii) / a.degree + a.degree * mpf(2) ** (-enclosure.precision + 2)
    return HeightEstimate(max(value, mpf(0)), error)


def is_root_of_unity(a: AlgebraicNumber) -> bool:
    """Return whether the polynomial of ``a`` is cyclotomic.

    A monic polynomial with constant term of absolute value one is matched exactly against the
    cyclotomic polynomials of the same degree (``phi(n) = d`` forces ``n <= 2 d**2``).
    """
    if a.leading != 1 or abs(a.coeffs[-1]) != 1 or not a.as_poly().is_sqf:
        return False
    d = a.degree
    enclosure = isolate_roots(a, 64)
    with working_precision(enclosure.precision):
        for z, r in zip(enclosure.roots, enclosure.radii, strict=True):
            if fabs(fabs(z) - 1) > r + mpf(2) ** (-48):
                return False
    poly = a.as_poly()
    for n in range(1, 2 * d * d + 1):
        if totient(n) == d and Poly(cyclotomic_poly(n, _X), _X) == poly:
            return True
    return False


def _coefficient_bounds(d: int, cap: float) -> list[int]:
    mahler = math.exp(d * cap)
    return [math.floor(math.comb(d, i) * mahler) for i in range(d, -1, -1)]


def northcott_census(
    max_degree: int, height_cap: float, *, precision_bits: int | None = None
) -> list[AlgebraicNumber]:
    """Enumerate algebraic numbers of degree at most ``max_degree`` and height at most the cap.

    Candidates are the primitive integer polynomials with positive leading coefficient, nonzero
    constant term and ``|a_i| <= binom(d, i) * exp(d * cap)``. Polynomials failing the
    irreducibility screen are dropped. Deduplication is by polynomial.

    Args:
        max_degree: Largest degree, at most 4.
        height_cap: Height bound, at most ``ln 3``.
        precision_bits: Accuracy of the height evaluations.

    Returns:
        The census sorted by degree, then lexicographically by coefficients.

    Raises:
        CensusLimitError: If the request exceeds the desk-scale limits.
    """
    if not 1 <= max_degree <= MAX_CENSUS_DEGREE:
        raise CensusLimitError(f"max_degree must be in 1..{MAX_CENSUS_DEGREE}, got {max_degree}")
    if not 0 <= height_cap <= MAX_CENSUS_CAP:
        raise CensusLimitError(f"height_cap must be in [0, ln 3], got {height_cap}")
    limit = get_config().census_max_candidates
    plan = {d: _coefficient_bounds(d, height_cap) for d in range(1, max_degree + 1)}
    candidates = sum(
        bounds[0] * math.prod(2 * b + 1 for b in bounds[1:]) for bounds in plan.values()
    )
    if candidates > limit:
        raise CensusLimitError(
            f"Census would examine {candidates} polynomials (limit {limit}); "
            "lower the cap or degree"
        )

    found: list[AlgebraicNumber] = []
    screened = 0
    for d, bounds in plan.items():
        ranges = [range(1, bounds[0] + 1)] + [range(-b, b + 1) for b in bounds[1:]]
        for coeffs in itertools.product(*ranges):
            if coeffs[-1] == 0 or math.gcd(*coeffs) != 1:
                continue
            number = AlgebraicNumber(coeffs)
            if not number.passes_irreducibility_screen():
                screened += 1
                continue
            if _screened_height(number, precision_bits).value > height_cap:
                continue
            found.append(number)
        logger.debug("Census degree %d: %d numbers so far", d, len(found))
    if screened:
        logger.warning("Census dropped %d reducible candidates", screened)
    return found

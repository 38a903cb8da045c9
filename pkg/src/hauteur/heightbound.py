"""Explicit lower bounds for the Weil height along a tower of ray class fields.

The pipeline is: compositum ramification index ``e`` and inertia degree ``f`` of the local
completions, then the Frobenius parameters ``(lambda, beta)`` from ``e``, then the bound
``(beta * [K_p:Q_p] / [K:Q] * ln p - ln 2) / (p**(f + lambda) + p**lambda)``. The bound is
astronomically small, so only its natural logarithm is ever formed.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction

from mpmath import iv, log, log1p, mp, mpf
from sympy import n_order

from ._internal.precision import working_precision
from ._internal.validation import (
    validate_non_empty,
    validate_non_negative,
    validate_positive,
    validate_prime,
)
from .compositum import ExtensionMultiset, inertia_factor, ramification_bound
from .config import get_config
from .exactmath import Factorization, interval_sign
from .exceptions import InputError, NonPositiveBoundError, ScenarioError
from .krasner import ExtensionProfile, LocalField, count_with_profile
from .types import ExactRational

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BaseFieldData:
    """Invariants of the base field ``K`` at the prime ``p`` above ``p``.

    Attributes:
        deg_K: ``[K : Q]``.
        local_deg: ``[K_p : Q_p]``.
        e_p: Ramification index ``e_p(K|Q)``.
        f_p: Inertia degree ``f_p(K|Q)``.
        class_order: Order of the prime in the class group of ``K``.
    """

    deg_K: int = 1
    local_deg: int = 1
    e_p: int = 1
    f_p: int = 1
    class_order: int = 1

    def __post_init__(self) -> None:
        """Validate the local data."""
        for name in ("deg_K", "local_deg", "e_p", "f_p", "class_order"):
            validate_positive(getattr(self, name), name)
        if self.e_p * self.f_p != self.local_deg:
            raise InputError(
                f"e_p * f_p must equal local_deg, got {self.e_p} * {self.f_p} != {self.local_deg}"
            )
        if self.local_deg > self.deg_K:
            raise InputError(f"local_deg={self.local_deg} exceeds deg_K={self.deg_K}")

    @property
    def is_rational(self) -> bool:
        """Whether ``K = Q``."""
        return self.deg_K == 1


@dataclass(frozen=True)
class Tower:
    """One family of local completions in the tower.

    Attributes:
        d: Local degree ``d_n``.
        e: Ramification index ``e_n`` (divides ``d``).
        count: Number of distinct completions with this profile; ``None`` uses the Krasner count.
    """

    d: int
    e: int
    count: int | None = None

    def __post_init__(self) -> None:
        """Validate divisibility and the count."""
        validate_positive(self.d, "d")
        validate_positive(self.e, "e")
        if self.d % self.e:
            raise InputError(f"e={self.e} must divide d={self.d}")
        if self.count is not None:
            validate_positive(self.count, "count")

    @property
    def profile(self) -> ExtensionProfile:
        """The ``(e, f)`` profile with ``f = d / e``."""
        return ExtensionProfile(self.e, self.d // self.e)


@dataclass(frozen=True)
class Modulus:
    """Data ``(g_m, eps_m)`` of a modulus ``m`` of ``K``.

    Attributes:
        g: Order of the generator of the prime ideal modulo ``m``.
        eps: 1 or 2.
    """

    g: int
    eps: int = 1

    def __post_init__(self) -> None:
        """Validate the modulus data."""
        validate_positive(self.g, "g")
        if self.eps not in (1, 2):
            raise InputError(f"eps must be 1 or 2, got {self.eps}")


@dataclass(frozen=True)
class TowerScenario:
    """Full input of the height-bound pipeline.

    Attributes:
        p: Rational prime under the chosen place.
        base: Local data of the base field.
        towers: Profiles of the local completions.
        M: Bound on the moduli.
        moduli: Explicit ``(g, eps)`` data; ``None`` computes ``g`` over ``Q`` with ``eps = 1``.
        name: Optional label carried into reports.
    """

    p: int
    base: BaseFieldData
    towers: tuple[Tower, ...]
    M: int = 1
    moduli: tuple[Modulus, ...] | None = None
    name: str = ""

    def __post_init__(self) -> None:
        """Validate the scenario as a whole."""
        validate_prime(self.p, "p")
        validate_positive(self.M, "M")
        if not self.towers:
            raise ScenarioError("A scenario needs at least one tower")
        seen: set[tuple[int, int]] = set()
        for tower in self.towers:
            key = (tower.d, tower.e)
            if key in seen:
                raise ScenarioError(f"Duplicate tower profile d={tower.d}, e={tower.e}")
            seen.add(key)
        if self.moduli is None and not self.base.is_rational:
            raise ScenarioError("Rational-base moduli need deg_K = 1; list moduli explicitly")
        if self.moduli is not None and not self.moduli:
            raise ScenarioError("moduli must be non-empty when given")

    def local_field(self) -> LocalField:
        """The completion ``K_p`` as a Krasner descriptor."""
        return LocalField(self.p, self.base.local_deg)

    def modulus_data(self) -> tuple[Modulus, ...]:
        """Explicit moduli, or the single rational-base modulus."""
        if self.moduli is not None:
            return self.moduli
        return (Modulus(rational_base_g(self.M, self.p), 1),)

    def multiset(self) -> ExtensionMultiset:
        """Local profiles with multiplicities (Krasner counts filled in)."""
        field = self.local_field()
        entries = []
        for tower in self.towers:
            profile = tower.profile
            count = tower.count
            if count is None:
                count = count_with_profile(field, profile.e, profile.f)
            entries.append((profile, count))
        return ExtensionMultiset(self.p, tuple(entries))


@dataclass(frozen=True)
class BoundReport:
    """Result of ``evaluate_scenario``.

    Attributes:
        e_bound: Bound on the ramification index over ``Q``.
        f_bound: Bound on the inertia degree over ``Q``.
        k: Index with ``p**(k-1) (p-1) <= e < p**k (p-1)``.
        lambda_: Smallest admissible ``lambda``.
        beta: ``beta_lambda(e, p)``.
        ln_bound: Natural logarithm of the height lower bound.
        positivity: Whether the numerator of the bound is positive.
        name: Scenario label.
    """

    e_bound: Factorization
    f_bound: Factorization
    k: int
    lambda_: int
    beta: ExactRational
    ln_bound: mpf
    positivity: bool
    name: str = ""

    def log10_f(self) -> mpf:
        """Decimal logarithm of ``f_bound``."""
        return self.f_bound.log10()

    def log10_height_bound(self) -> mpf:
        """Decimal logarithm of the height lower bound."""
        with working_precision(get_config().precision_bits):
            return self.ln_bound / log(10)


def find_k(e: int, p: int) -> int:
    """Return the unique ``k >= 0`` with ``p**(k-1) (p-1) <= e < p**k (p-1)``.

    Example:
        >>> find_k(20, 3)
        3
    """
    validate_positive(e, "e")
    validate_prime(p, "p")
    k = 0
    threshold = p - 1
    while e >= threshold:
        k += 1
        threshold *= p
    return k


def beta_value(lam: int, e: int, p: int, k: int | None = None) -> ExactRational:
    """Return ``beta_lambda(e, p) = p**min(lambda, k) / e + max(0, lambda - k)``."""
    validate_non_negative(lam, "lambda")
    kk = find_k(e, p) if k is None else k
    return Fraction(p ** min(lam, kk), e) + max(0, lam - kk)


def satisfies_threshold(beta: ExactRational, p: int, base: BaseFieldData) -> bool:
    """Decide ``beta * [K_p:Q_p] * ln p > [K:Q] * ln 2`` exactly.

    For ``p = 2`` this is a rational comparison. Otherwise equality is impossible and the sign is
    settled by interval arithmetic at doubling precision.
    """
    if p == 2:
        return beta * base.local_deg > base.deg_K
    scaled = beta * base.local_deg

    def build() -> object:
        left = iv.mpf(scaled.numerator) * iv.ln(iv.mpf(p)) / iv.mpf(scaled.denominator)
        return left - iv.mpf(base.deg_K) * iv.ln(iv.mpf(2))

    return interval_sign(build) > 0


def lambda_beta(e: int, p: int, base: BaseFieldData) -> tuple[int, ExactRational]:
    """Return the smallest ``lambda >= 0`` whose ``beta_lambda`` passes the threshold.

    Example:
        >>> lambda_beta(20, 3, BaseFieldData())
        (3, Fraction(27, 20))
    """
    validate_prime(p, "p")
    k = find_k(e, p)
    lam = 0
    while True:
        beta = beta_value(lam, e, p, k)
        if satisfies_threshold(beta, p, base):
            logger.debug("lambda=%d, beta=%s for e=%d, p=%d (k=%d)", lam, beta, e, p, k)
            return lam, beta
        lam += 1


def _as_mpf(value: int | Factorization) -> mpf:
    """Convert an exponent to ``mpf`` at the current working precision."""
    if isinstance(value, int):
        return mpf(value)
    try:
        return mpf(value.to_int())
    except InputError:
        return mp.exp(value.ln(mp.prec))


def height_bound(
    f: int | Factorization,
    lam: int,
    beta: ExactRational,
    p: int,
    base: BaseFieldData,
    *,
    bits: int | None = None,
) -> mpf:
    """Natural logarithm of the height lower bound.

    ``ln(beta * local_deg / deg_K * ln p - ln 2) - (f + lambda) ln p - ln(1 + p**-f)``.

    Args:
        f: Inertia degree bound (plain or factored).
        lam: ``lambda``.
        beta: ``beta_lambda``.
        p: Rational prime.
        base: Base field data.
        bits: Precision of the result; defaults to ``Config.precision_bits``.

    Raises:
        InputError: If ``f`` is not a positive integer.
        NonPositiveBoundError: If the numerator is not positive.
    """
    validate_prime(p, "p")
    validate_non_negative(lam, "lambda")
    if isinstance(f, int):
        validate_positive(f, "f")
    if not satisfies_threshold(beta, p, base):
        raise NonPositiveBoundError(
            f"beta * local_deg * ln p <= deg_K * ln 2 for beta={beta}, p={p}, "
            f"local_deg={base.local_deg}, deg_K={base.deg_K}"
        )
    prec = bits if bits is not None else get_config().precision_bits
    magnitude = float(f.ln(64)) if isinstance(f, Factorization) else math.log(f)
    guard = int(magnitude / math.log(2)) + 32
    with working_precision(prec + guard):
        f_value = _as_mpf(f)
        ln_p = log(p)
        numerator = mpf(beta.numerator) * base.local_deg * ln_p / (
            mpf(beta.denominator) * base.deg_K
        ) - log(2)
        tail = mpf(0) if f_value > 2 * prec else log1p(mpf(p) ** (-f_value))
        return log(numerator) - (f_value + lam) * ln_p - tail


def modulus_N(M: int, p: int) -> int:
    """Least common multiple of all ``j <= M`` coprime to ``p``.

    Example:
        >>> modulus_N(10, 3)
        280
    """
    validate_positive(M, "M")
    validate_prime(p, "p")
    return math.lcm(*(j for j in range(1, M + 1) if j % p))


def rational_base_g(M: int, p: int) -> int:
    """Multiplicative order of ``p`` modulo ``modulus_N(M, p)`` (1 when the modulus is 1)."""
    modulus = modulus_N(M, p)
    if modulus == 1:
        return 1
    return int(n_order(p, modulus))


def h_n(base: BaseFieldData, e_n: int, g: int) -> int:
    """Return ``2 * class_order * e_n * g``."""
    validate_positive(e_n, "e_n")
    validate_positive(g, "g")
    return 2 * base.class_order * e_n * g


def _degree_lcm(towers: Iterable[Tower], moduli: Iterable[Modulus]) -> int:
    degrees = [tower.d for tower in towers]
    factors = [modulus.eps * modulus.g for modulus in moduli]
    validate_non_empty(degrees, "towers")
    return math.lcm(*(factor * d for factor in factors for d in degrees))


def evaluate_scenario(sc: TowerScenario) -> BoundReport:
    """Run the full pipeline on a scenario.

    ``e_bound = e_p * ramification_bound``; ``f_bound = f_p * class_order *
    lcm(eps * g * d_n) * E``; then ``(lambda, beta)`` from ``e_bound`` and the bound from
    ``f_bound``.

    Raises:
        NonPositiveBoundError: Propagated from ``height_bound``.
    """
    ms = sc.multiset()
    moduli = sc.modulus_data()
    e_bound = ramification_bound(ms) * sc.base.e_p
    factor = inertia_factor(ms)
    degree_lcm = _degree_lcm(sc.towers, moduli)
    f_bound = factor.value * (sc.base.f_p * sc.base.class_order * degree_lcm)
    logger.info(
        "Scenario %s: e=%s, f=%s (E branch %s)",
        sc.name or "<unnamed>",
        e_bound,
        f_bound,
        factor.branch,
    )

    e_value = e_bound.to_int()
    k = find_k(e_value, sc.p)
    lam, beta = lambda_beta(e_value, sc.p, sc.base)
    ln_bound = height_bound(f_bound, lam, beta, sc.p, sc.base)
    return BoundReport(
        e_bound=e_bound,
        f_bound=f_bound,
        k=k,
        lambda_=lam,
        beta=beta,
        ln_bound=ln_bound,
        positivity=satisfies_threshold(beta, sc.p, sc.base),
        name=sc.name,
    )

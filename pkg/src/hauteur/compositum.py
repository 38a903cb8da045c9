"""Ramification and inertia bounds for a compositum of local extensions.

Bounds are returned as ``Factorization`` values. Where a distinguished wild extension (or a
wild pair) has to be chosen, every admissible choice is evaluated and the smallest bound wins;
ties go to the lexicographically smallest choice.
"""

from __future__ import annotations

import logging
import math
from collections import Counter
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from functools import reduce

from ._internal.validation import validate_non_empty, validate_positive, validate_prime
from .exactmath import Factorization, a_r
from .exceptions import InputError
from .krasner import ExtensionProfile
from .types import InertiaBranch

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExtensionMultiset:
    """Extensions ``K_1/F, ..., K_n/F`` given by their profiles with multiplicities.

    Attributes:
        p: Residue characteristic of ``F``.
        entries: ``(profile, multiplicity)`` pairs; a profile may appear in several entries.
        galois: Whether every extension is Galois over ``F``.
    """

    p: int
    entries: tuple[tuple[ExtensionProfile, int], ...]
    galois: bool = False
    _by_e: Mapping[int, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        """Validate entries and cache ``N(e)``."""
        validate_prime(self.p, "p")
        validate_non_empty(self.entries, "entries")
        counts: Counter[int] = Counter()
        for profile, multiplicity in self.entries:
            validate_positive(multiplicity, f"multiplicity of {profile}")
            counts[profile.e] += multiplicity
        object.__setattr__(self, "_by_e", dict(sorted(counts.items())))

    @classmethod
    def from_triples(
        cls, p: int, triples: Iterable[tuple[int, int, int]], *, galois: bool = False
    ) -> ExtensionMultiset:
        """Build from ``(e, f, multiplicity)`` triples."""
        entries = tuple((ExtensionProfile(e, f), count) for e, f, count in triples)
        return cls(p, entries, galois=galois)

    @property
    def n(self) -> int:
        """Total number of extensions."""
        return sum(multiplicity for _, multiplicity in self.entries)

    @property
    def m(self) -> int:
        """Number of tamely ramified extensions."""
        return sum(count for e, count in self._by_e.items() if e % self.p)

    @property
    def lambda_set(self) -> tuple[int, ...]:
        """Distinct ramification indices, ascending."""
        return tuple(self._by_e)

    @property
    def tame_set(self) -> tuple[int, ...]:
        """Distinct tame ramification indices, ascending."""
        return tuple(e for e in self._by_e if e % self.p)

    @property
    def wild_set(self) -> tuple[int, ...]:
        """Distinct wild ramification indices, ascending."""
        return tuple(e for e in self._by_e if e % self.p == 0)

    def count(self, e: int) -> int:
        """Return ``N(e)``, the number of extensions with ramification index ``e``."""
        return self._by_e.get(e, 0)

    @property
    def f_lcm(self) -> int:
        """Least common multiple of the inertia degrees."""
        return math.lcm(*(profile.f for profile, _ in self.entries))

    def degree_counts(self) -> dict[int, int]:
        """Number of extensions per local degree ``e * f``."""
        counts: Counter[int] = Counter()
        for profile, multiplicity in self.entries:
            counts[profile.degree] += multiplicity
        return dict(sorted(counts.items()))


@dataclass(frozen=True)
class InertiaFactor:
    """The factor ``E`` of the compositum inertia bound.

    Attributes:
        value: ``E`` in factored form.
        branch: Formula used.
        wild_pair: Ramification indices of the two leading wild extensions (many-wild only).
        lambda_set: The index set whose ``a(q)`` enters ``E``.
    """

    value: Factorization
    branch: InertiaBranch
    wild_pair: tuple[int, int] | None
    lambda_set: tuple[int, ...]


def _power(e: int, k: int) -> Factorization:
    return Factorization.of(e) ** k


def _a_product(lambda_set: Iterable[int]) -> Factorization:
    """Return ``prod_q q**a(q)`` over the primes dividing some element."""
    values = sorted(set(lambda_set))
    primes = sorted({q for e in values for q, _ in Factorization.of(e).factors})
    return Factorization.from_dict({q: a_r(values, q) for q in primes})


def ramification_bound(ms: ExtensionMultiset) -> Factorization:
    """Bound the ramification index of the compositum.

    All-tame multisets give the exact value ``lcm(e_i)``. Otherwise the bound is minimized over
    the distinguished wild index ``e~``:
    ``lcm(tame e, e~) * e~**(N(e~) - 1) * prod_{wild e != e~} e**N(e)``.
    """
    tame_lcm = math.lcm(*ms.tame_set) if ms.tame_set else 1
    if not ms.wild_set:
        return Factorization.of(tame_lcm)

    best: Factorization | None = None
    best_choice = 0
    for chosen in ms.wild_set:
        candidate = Factorization.of(math.lcm(tame_lcm, chosen)) * _power(
            chosen, ms.count(chosen) - 1
        )
        for other in ms.wild_set:
            if other != chosen:
                candidate = candidate * _power(other, ms.count(other))
        if best is None or candidate < best:
            best, best_choice = candidate, chosen
    logger.debug("Ramification bound uses distinguished wild index %d", best_choice)
    assert best is not None
    return best


def _wild_pairs(ms: ExtensionMultiset) -> list[tuple[int, int]]:
    wild = ms.wild_set
    pairs = []
    for i, first in enumerate(wild):
        if ms.count(first) >= 2:
            pairs.append((first, first))
        pairs.extend((first, second) for second in wild[i + 1 :])
    return pairs


def inertia_factor(ms: ExtensionMultiset) -> InertiaFactor:
    """Compute the factor ``E`` with ``f(K_1...K_n | F) <= lcm(f_i) * E``.

    With at most two wild extensions, ``E = prod_{Lambda_n} e**(N(e)-1) * prod_q q**a_n(q)``.
    With more, ``E = prod_{Lambda_{m+2}} e**-1 * prod_q q**a_{m+2}(q) * prod_{Lambda_n} e**N(e)``
    minimized over the two leading wild extensions.

    Raises:
        InputError: If the division by ``prod e`` is not exact (cannot happen for valid input).
    """
    if ms.n == 1:
        only = ms.lambda_set
        return InertiaFactor(Factorization.one(), "single", None, only)

    if ms.m >= ms.n - 2:
        value = Factorization.product(_power(e, ms.count(e) - 1) for e in ms.lambda_set)
        value = value * _a_product(ms.lambda_set)
        logger.debug("Inertia factor: tame-or-two-wild branch over %s", ms.lambda_set)
        return InertiaFactor(value, "tame-or-two-wild", None, ms.lambda_set)

    full = Factorization.product(_power(e, ms.count(e)) for e in ms.lambda_set)
    best: InertiaFactor | None = None
    for pair in _wild_pairs(ms):
        subset = tuple(sorted(set(ms.tame_set) | set(pair)))
        numerator = full * _a_product(subset)
        value = numerator.divide_exact(Factorization.product(subset))
        if best is None or value < best.value:
            best = InertiaFactor(value, "many-wild", pair, subset)
    if best is None:
        raise InputError(f"No admissible wild pair in {ms.wild_set}")
    logger.debug("Inertia factor: many-wild branch with leading pair %s", best.wild_pair)
    return best


def inertia_bound(ms: ExtensionMultiset, f_lcm: int | None = None) -> Factorization:
    """Bound the inertia degree of the compositum by ``f_lcm * E``.

    Args:
        ms: The extensions.
        f_lcm: Least common multiple of the inertia degrees; derived from the profiles when
            omitted.
    """
    base = ms.f_lcm if f_lcm is None else f_lcm
    validate_positive(base, "f_lcm")
    return inertia_factor(ms).value * base


def two_field_inertia_bound(p1: ExtensionProfile, p2: ExtensionProfile) -> int:
    """Bound the inertia degree of a compositum of two fields by ``lcm(f1, f2) * gcd(e1, e2)``.

    Example:
        >>> two_field_inertia_bound(ExtensionProfile(2, 3), ExtensionProfile(4, 5))
        30
    """
    return math.lcm(p1.f, p2.f) * math.gcd(p1.e, p2.e)


def crude_bound(counts: ExtensionMultiset | Mapping[int, int]) -> Factorization:
    """Bound the full compositum degree by ``prod_d d**N_{F,d}``.

    Args:
        counts: Per-degree counts ``{d: N_{F,d}}``, or a multiset whose extensions are counted
            by local degree.
    """
    per_degree = counts.degree_counts() if isinstance(counts, ExtensionMultiset) else counts
    validate_non_empty(per_degree, "counts")
    for degree, count in per_degree.items():
        validate_positive(degree, "degree")
        validate_positive(count, f"count of degree {degree}")
    return Factorization.product(_power(degree, count) for degree, count in per_degree.items())


def equality_case(
    ms: ExtensionMultiset, linearly_disjoint: bool
) -> tuple[Factorization, Factorization] | None:
    """Return the exact ``(e, f)`` of the compositum when the inertia bound is attained.

    The conditions are: linear disjointness (asserted by the caller), tame ramification
    throughout, pairwise equal or coprime ramification indices, and ``prod f_i = lcm(f_i)``.

    Returns:
        ``(prod_{Lambda} e, prod_{Lambda} e**(N(e)-1) * prod f_i)`` or ``None`` when a condition
        fails.
    """
    if not linearly_disjoint or ms.wild_set:
        return None
    indices = ms.lambda_set
    for i, first in enumerate(indices):
        for second in indices[i + 1 :]:
            if math.gcd(first, second) != 1:
                return None
    f_product = math.prod(profile.f**multiplicity for profile, multiplicity in ms.entries)
    if f_product != ms.f_lcm:
        return None
    e_value = Factorization.product(indices)
    f_value = Factorization.product(_power(e, ms.count(e) - 1) for e in indices) * f_product
    return e_value, f_value


def check_invariants(
    ms: ExtensionMultiset, e: int | Factorization, f: int | Factorization
) -> list[str]:
    """Check claimed invariants ``(e, f)`` of the compositum against the bounds.

    Any compositum has ``lcm(e_i) | e``, ``lcm(f_i) | f``, ``e <= ramification_bound`` and
    ``f <= inertia_bound``. When every extension is Galois over ``F`` the bounds turn into
    divisibility: ``e`` divides ``prod e_i`` and ``f`` divides the inertia bound.

    Args:
        ms: The extensions.
        e: Claimed ramification index of the compositum.
        f: Claimed inertia degree of the compositum.

    Returns:
        One message per violated condition, empty when the claim is consistent.

    Raises:
        InputError: If ``e`` or ``f`` is not a positive integer.
    """
    e_value = e if isinstance(e, Factorization) else Factorization.of(e)
    f_value = f if isinstance(f, Factorization) else Factorization.of(f)
    e_lcm = reduce(Factorization.lcm, (Factorization.of(index) for index in ms.lambda_set))
    f_lcm = Factorization.of(ms.f_lcm)
    e_limit = ramification_bound(ms)
    f_limit = inertia_bound(ms)

    problems = []
    if not e_lcm.divides(e_value):
        problems.append(f"e={e_value} is not a multiple of lcm(e_i)={e_lcm}")
    if not f_lcm.divides(f_value):
        problems.append(f"f={f_value} is not a multiple of lcm(f_i)={f_lcm}")
    if e_value > e_limit:
        problems.append(f"e={e_value} exceeds the ramification bound {e_limit}")
    if f_value > f_limit:
        problems.append(f"f={f_value} exceeds the inertia bound {f_limit}")
    if ms.galois:
        e_product = Factorization.product(_power(index, ms.count(index)) for index in ms.lambda_set)
        if not e_value.divides(e_product):
            problems.append(f"e={e_value} does not divide prod e_i={e_product}")
        if not f_value.divides(f_limit):
            problems.append(f"f={f_value} does not divide the inertia bound {f_limit}")
    return problems

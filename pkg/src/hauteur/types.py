"""Type definitions for the hauteur package."""

from __future__ import annotations

from fractions import Fraction
from typing import Literal

ExactRational = Fraction
"""Reduced rational with positive denominator; ``fractions.Fraction`` keeps both invariants."""

DensityKind = Literal["inert", "totally_ramified"]
"""Splitting behaviour of ``p`` in a degree-n field.

- "inert": ``p`` stays prime (the set I(p, n))
- "totally_ramified": ``p`` is a full power of one prime (the set R(p, n))
"""

InertiaBranch = Literal["single", "tame-or-two-wild", "many-wild"]
"""Which formula produced the E factor of a compositum inertia bound.

- "single": one extension, E = 1
- "tame-or-two-wild": at most two wildly ramified extensions (m >= n - 2)
- "many-wild": more than two wildly ramified extensions (m < n - 2)
"""

RowName = Literal[
    "ex3_1",
    "ex3_2",
    "ex3_3",
    "ex3_4",
    "appendix_q11",
    "appendix_q5",
    "krasner_values",
    "density_values",
]
"""Names of the rows replayed by ``hauteur reproduce``."""

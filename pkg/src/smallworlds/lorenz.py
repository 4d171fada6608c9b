"""Non-normalized Lorenz curves, the generalized majorization partial order,
and scalar measures that respect it (plus the classical normalized Gini)."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

Numeric = int | float | Fraction


class Relation(str, enum.Enum):
    LESS = "less"
    GREATER = "greater"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class MajorizationVerdict:
    relation: Relation
    strict: bool

    def swapped(self) -> "MajorizationVerdict":
        if self.relation is Relation.LESS:
            return MajorizationVerdict(Relation.GREATER, self.strict)
        if self.relation is Relation.GREATER:
            return MajorizationVerdict(Relation.LESS, self.strict)
        return self


def _check_decreasing_nonnegative(x: Sequence[Numeric]) -> None:
    if any(v < 0 for v in x):
        raise ValueError("array entries must be non-negative")
    if any(x[i] < x[i + 1] for i in range(len(x) - 1)):
        raise ValueError("array must be sorted decreasingly")


def cumulative(x: Sequence[Numeric]) -> list[Numeric]:
    """Partial sums S_1..S_N of a decreasing non-negative array."""
    _check_decreasing_nonnegative(x)
    out: list[Numeric] = []
    total: Numeric = 0
    for v in x:
        total = total + v
        out.append(total)
    return out


def lorenz_curve(x: Sequence[Numeric]) -> list[tuple[int, Numeric]]:
    """Points (j, S_j), j = 0..N, of the non-normalized Lorenz curve."""
    return [(0, 0)] + list(enumerate(cumulative(x), start=1))


def majorize_compare(x: Sequence[Numeric], y: Sequence[Numeric]) -> MajorizationVerdict:
    """Prefix-sum comparison: x majorized by y iff every prefix sum of x is <=."""
    if len(x) != len(y):
        raise ValueError("majorization is defined only for equal-length arrays")
    cx, cy = cumulative(x), cumulative(y)
    some_less = any(a < b for a, b in zip(cx, cy))
    some_greater = any(a > b for a, b in zip(cx, cy))
    if some_less and some_greater:
        return MajorizationVerdict(Relation.INCOMPARABLE, False)
    if not some_less and not some_greater:
        return MajorizationVerdict(Relation.EQUAL, False)
    if some_less:
        return MajorizationVerdict(Relation.LESS, True)
    return MajorizationVerdict(Relation.GREATER, True)


def gini_generalized(x: Sequence[Numeric]) -> Numeric:
    """Sum of all prefix sums; monotone under the majorization order."""
    return sum(cumulative(x))


def theil(x: Sequence[Numeric]) -> float:
    """Entropy measure: sum of v*ln(v), with 0*ln(0) = 0."""
    _check_decreasing_nonnegative(x)
    return sum(float(v) * math.log(v) for v in x if v > 0)


def power_measure(x: Sequence[Numeric], p: float) -> float:
    """Sum of p-th powers, p > 1."""
    if p <= 1:
        raise ValueError("power measure requires p > 1")
    _check_decreasing_nonnegative(x)
    return sum(float(v) ** p for v in x)


def gini_standard(x: Sequence[Numeric]) -> Fraction:
    """Classical Gini coefficient: mean absolute pairwise difference over twice the mean."""
    _check_decreasing_nonnegative(x)
    n = len(x)
    total = sum(x)
    if total == 0:
        raise ValueError("standard Gini undefined for zero-sum input")
    diff_sum = sum(abs(a - b) for a in x for b in x)
    return Fraction(diff_sum) / (2 * n * Fraction(total))

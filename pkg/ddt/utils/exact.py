"""Exact rational helpers and square-root comparisons."""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Mapping

from ddt.constants import FLOAT_GUARD


def sum_reciprocals(histogram: Mapping[int, int], shift: int = 1) -> Fraction:
    """Exact ``sum(count / (value + shift))`` over a value histogram."""
    total = Fraction(0)
    for value, count in histogram.items():
        total += Fraction(count, value + shift)
    return total


def sum_inverse_sqrt(histogram: Mapping[int, int], scale: float = 1.0) -> float:
    """``sum(scale * count / sqrt(value + 1))`` with compensated summation."""
    return math.fsum(scale * count / math.sqrt(value + 1) for value, count in histogram.items())


def less_than_over_sqrt(value: Fraction, numerator: int, radicand: int) -> bool:
    """Exact test of ``value < numerator / sqrt(radicand)`` for rational ``value``."""
    if value < 0:
        return True
    return value * value * radicand < numerator * numerator


def at_least(lhs: float, rhs: float, guard: float = FLOAT_GUARD) -> bool:
    """``lhs >= rhs`` up to a relative guard band for irrational float sides."""
    return lhs >= rhs - guard * max(abs(lhs), abs(rhs), 1.0)


def fraction_text(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"

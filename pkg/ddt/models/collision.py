"""Degree-collision probability records."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ddt.errors import PreconditionError
from ddt.utils.exact import at_least


@dataclass(frozen=True, slots=True)
class CollisionParams:
    """``s = |N(x) - N(y)|``, ``t = |N(y) - N(x)|`` and whether ``xy`` is an edge."""

    s: int
    t: int
    edge: bool

    def __post_init__(self) -> None:
        if self.s < 0 or self.t < 0:
            raise PreconditionError(f"negative counts s={self.s}, t={self.t}")
        if self.edge and (self.s < 1 or self.t < 1):
            raise PreconditionError("an edge puts each endpoint in the other's private neighbourhood")

    @property
    def delta(self) -> int:
        return self.s + self.t - 2 if self.edge else self.s + self.t


@dataclass(frozen=True, slots=True)
class ExactProb:
    """A probability as a rational; ``exact`` is False when it came from the log-space float path."""

    value: Fraction
    exact: bool = True

    def __post_init__(self) -> None:
        if not 0 <= self.value <= 1:
            raise PreconditionError(f"probability {self.value} outside [0, 1]")

    def __float__(self) -> float:
        return float(self.value)


@dataclass(frozen=True, slots=True)
class DegreeGraphExpectation:
    """Expected edge count of the degree graph D.

    ``unconditional_sum`` is the sum of unconditional collision probabilities over four;
    ``exact`` is the true expectation, conditioning adjacent pairs on both endpoints being
    sampled; ``bound`` is the sum of 5/sqrt(delta+1).
    """

    unconditional_sum: Fraction
    exact: Fraction
    bound: float
    all_exact: bool = True


@dataclass(frozen=True, slots=True)
class PairMassChain:
    """``n*hom >= sum 1/(delta+1) >= (sum 1/sqrt(delta+1))^2 / C(n,2)``."""

    n_hom: int
    reciprocal_sum: Fraction
    cauchy_schwarz: float

    @property
    def left_holds(self) -> bool:
        return self.n_hom >= self.reciprocal_sum

    @property
    def right_holds(self) -> bool:
        return at_least(float(self.reciprocal_sum), self.cauchy_schwarz)

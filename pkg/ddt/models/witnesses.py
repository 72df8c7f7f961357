"""Witness records for homogeneous sets and distinct-degree subsets."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Tuple

from ddt.models.graph import VertexSet

HomKind = Literal["clique", "independent"]


@dataclass(frozen=True, slots=True)
class HomWitness:
    """A clique or independent set; ``size`` always equals ``len(members)``."""

    kind: HomKind
    members: VertexSet

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(frozen=True, slots=True)
class HomResult:
    """hom(G) with its witness; ``exact`` is False when the value is a heuristic lower bound."""

    size: int
    witness: HomWitness
    exact: bool = True


@dataclass(frozen=True, slots=True)
class CaroWeiBound:
    """Sum of 1/(deg(v)+1) and the weaker v(G)^2/(2e(G)+v(G)) form."""

    sum: Fraction
    turan: Fraction


@dataclass(frozen=True, slots=True)
class DegreeClasses:
    """Partition of ``subset`` by degree in G[subset]; the degree graph D is the union of
    one clique per class."""

    subset: VertexSet
    classes: Tuple[Tuple[int, VertexSet], ...]

    @property
    def distinct_count(self) -> int:
        return len(self.classes)

    def degree_graph_edges(self) -> int:
        total = 0
        for _, members in self.classes:
            size = len(members)
            total += size * (size - 1) // 2
        return total

    def representatives(self) -> VertexSet:
        mask = 0
        for _, members in self.classes:
            low = members.mask & -members.mask
            mask |= low
        return VertexSet(self.subset.parent_n, mask)


@dataclass(frozen=True, slots=True)
class DiversityWitness:
    """A subset whose induced subgraph has ``distinct_count`` distinct degrees."""

    subset: VertexSet
    distinct_count: int
    representatives: VertexSet

    def sort_key(self) -> Tuple[int, int, int]:
        # larger count first, then smaller subset, then smaller mask
        return (-self.distinct_count, len(self.subset), self.subset.mask)

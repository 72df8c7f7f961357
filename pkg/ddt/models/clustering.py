"""Neighbourhood-distance clustering records."""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ddt.models.graph import VertexSet

Orientation = Literal["graph", "complement"]
Side = Literal["graph", "complement", "neither"]


class ProofConstants(BaseModel):
    """Constants of the large-homogeneous-set argument for a target ``k`` and slack ``eps``."""

    model_config = ConfigDict(frozen=True)

    k: int
    eps: float
    beta: float
    eta: float
    eta_variant: float = Field(description="eps*beta/(1e5*k), the form used in the final counting step")
    J: float
    J_alt: float = Field(description="1e24*k^20*2^(4k)/(eps*beta)^4")
    K: float
    Delta: float
    L: float


class ClusterParams(BaseModel):
    """Thresholds of the seed-and-grow partition procedure."""

    model_config = ConfigDict(frozen=True)

    seed_radius: float = Field(..., gt=0, description="seed ball: delta(w, x) < seed_radius")
    link_dist: float = Field(..., description="growth: delta(x, C) <= link_dist")
    growth_ratio: float = Field(..., gt=0, lt=1, description="keep growing while |T| >= ratio*|C|")
    seed_frac: float = Field(..., gt=0, lt=1, description="a seed needs more than frac*|W| ball members")
    min_cluster_frac: float = Field(..., gt=0, lt=1, description="closed clusters need more than frac*n vertices")

    @model_validator(mode="after")
    def _radius_below_link(self) -> "ClusterParams":
        if not self.seed_radius < self.link_dist:
            raise ValueError("seed_radius must be smaller than link_dist")
        return self

    @classmethod
    def from_constants(cls, constants: ProofConstants) -> "ClusterParams":
        k = constants.k
        return cls(
            seed_radius=1e6 * k * k,
            link_dist=constants.J,
            growth_ratio=constants.beta / 2,
            seed_frac=1.0 / (1e3 * k),
            min_cluster_frac=constants.beta / (1e4 * k),
        )


@dataclass(frozen=True, slots=True)
class ClusterResult:
    """Disjoint clusters plus the leftover set; together they cover every vertex.

    ``max_intra`` is the largest delta inside any cluster and ``min_inter`` the smallest delta
    across clusters (None when there is no such pair), so any K > max_intra and J < min_inter
    are certified.
    """

    clusters: Tuple[VertexSet, ...]
    leftover: VertexSet
    max_intra: int
    min_inter: Optional[int]


class PropertyCheck(BaseModel):
    name: str
    passed: bool
    detail: str = ""
    witness: Optional[List[int]] = None


class PartitionReport(BaseModel):
    """Per-property outcome of the four cluster properties."""

    passed: bool
    properties: List[PropertyCheck]


@dataclass(frozen=True, slots=True)
class IndependentCore:
    orientation: Orientation
    core: VertexSet

"""Verification and experiment report models."""
from __future__ import annotations

from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, Field

Relation = Literal["<", "<=", ">", ">=", "==", "|z|<="]


class Check(BaseModel):
    """One claim evaluated on concrete values; both sides are recorded."""

    claim: str = Field(..., description="Claim identifier, e.g. sqrt-bound or collision-bound")
    passed: bool
    lhs: str
    relation: Relation
    rhs: str
    tolerance: Optional[str] = Field(default=None, description="Statistical threshold or float guard")
    exact: bool = Field(default=True, description="False when an input was an estimate")
    note: str = ""

    @property
    def failing(self) -> bool:
        """Only conclusive violations fail a report."""
        return not self.passed and self.exact


class VerificationReport(BaseModel):
    """Self-contained record of a verification campaign."""

    subject: str
    quantities: Dict[str, Any] = Field(default_factory=dict)
    checks: List[Check] = Field(default_factory=list)
    seed: Optional[int] = None
    trials: Optional[int] = None
    statistically_sufficient: bool = True
    notes: List[str] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not any(check.failing for check in self.checks)

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check


class HistogramRow(BaseModel):
    degree: int
    predicted: float
    observed_mean: float
    observed_std: float
    z: float


class HistogramReport(BaseModel):
    """Observed mean count of each degree in G[U] against the binomial prediction."""

    subject: str
    clique_size: int
    trials: int
    seed: int
    z_threshold: float
    mean_subset_size: float
    rows: List[HistogramRow]
    passed: bool


class RunManifest(BaseModel):
    """Everything that determines a CLI run; equal manifests give byte-identical outputs."""

    command: str
    input: Optional[str] = None
    family: Optional[Dict[str, Any]] = None
    seed: Optional[int] = None
    trials: Optional[int] = None
    guards: Dict[str, int] = Field(default_factory=dict)
    output: Optional[str] = None
    format: Literal["json", "csv"] = "json"
    version: str
    generated_at: Optional[str] = None


class RatioRow(BaseModel):
    """One graph of the large-hom exploration: how f*hom/n behaves against sqrt(n/hom)."""

    subject: str
    n: int
    hom: int
    hom_exact: bool
    f_lower: int
    f_exact: bool
    ratio: float
    sqrt_ratio: float


class RatioReport(BaseModel):
    seed: int
    trials: int
    rows: List[RatioRow]


class GraphStats(BaseModel):
    """Summary printed by ``ddt stats``."""

    subject: str
    n: int
    edges: int
    max_degree: int
    hom: int
    hom_exact: bool
    hom_kind: str
    hom_witness: List[int]
    f: int
    f_exact: bool
    f_witness: List[int]
    delta_min: Optional[int] = None
    delta_max: Optional[int] = None
    delta_histogram: Dict[str, int] = Field(default_factory=dict)
    delta_skipped: bool = Field(False, description="True when n is above the pair guard and no distance table was built")


class WitnessReport(BaseModel):
    subject: str
    n: int
    trials: int
    seed: int
    distinct_count: int
    subset: List[int]
    representatives: List[int]
    bound: Optional[float] = None


class ClusterReport(BaseModel):
    subject: str
    clusters: List[List[int]]
    leftover: List[int]
    max_intra: int
    min_inter: Optional[int] = None
    validation: Optional[Dict[str, Any]] = None

    @property
    def passed(self) -> bool:
        return self.validation is None or bool(self.validation.get("passed"))

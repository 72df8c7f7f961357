"""Aggregate exports for toolkit models."""
from .clustering import (
    ClusterParams,
    ClusterResult,
    IndependentCore,
    PartitionReport,
    PropertyCheck,
    ProofConstants,
)
from .collision import CollisionParams, DegreeGraphExpectation, PairMassChain, ExactProb
from .families import FamilySpec
from .graph import Graph, VertexSet
from .reports import (
    Check,
    HistogramReport,
    HistogramRow,
    ClusterReport,
    GraphStats,
    RatioReport,
    RatioRow,
    RunManifest,
    VerificationReport,
    WitnessReport,
)
from .witnesses import CaroWeiBound, DegreeClasses, DiversityWitness, HomResult, HomWitness

__all__ = [
    "ClusterParams",
    "ClusterResult",
    "IndependentCore",
    "PartitionReport",
    "PropertyCheck",
    "ProofConstants",
    "CollisionParams",
    "DegreeGraphExpectation",
    "PairMassChain",
    "ExactProb",
    "FamilySpec",
    "Graph",
    "VertexSet",
    "Check",
    "HistogramReport",
    "HistogramRow",
    "ClusterReport",
    "GraphStats",
    "WitnessReport",
    "RatioReport",
    "RatioRow",
    "RunManifest",
    "VerificationReport",
    "CaroWeiBound",
    "DegreeClasses",
    "DiversityWitness",
    "HomResult",
    "HomWitness",
]

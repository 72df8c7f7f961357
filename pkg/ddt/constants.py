"""Shared constants for the distinct-degrees toolkit."""
from __future__ import annotations

from pathlib import Path

VERSION = "0.1.0"

DATA_DIR = Path(__file__).resolve().parents[1] / "data"
WITNESS_FLOOR_FILE = DATA_DIR / "witness_floor.json"

# Statistical thresholds, recorded in every report that uses them.
HISTOGRAM_Z_THRESHOLD = 5.0
MEAN_Z_THRESHOLD = 3.0
FREQUENCY_Z_THRESHOLD = 3.0
FREQUENCY_CEILING = 1.0 / 3.0
# Fewer trials than this mark a report statistically insufficient.
MIN_STATISTICAL_TRIALS = 30

# Relative guard band for comparisons where both sides are irrational.
FLOAT_GUARD = 1e-12

# Numerators and factors of the square-root diversity bound.
SQRT_BOUND_DENOMINATOR = 250
COLLISION_NUMERATOR = 20
CENTRAL_BINOMIAL_NUMERATOR = 10
EDGE_MASS_NUMERATOR = 5
MARKOV_FACTOR = 12
HOEFFDING_MIN_N = 250

# Upper limit for the exhaustive labelled-graph sweep.
SWEEP_MAX_N = 6

# Default grid for the proof-constant self-consistency checks.
CONSTANT_GRID_KS = (2, 3, 4, 5, 6, 7, 8)
CONSTANT_GRID_EPSS = (0.05, 0.1, 0.25, 0.49)

__all__ = [
    "VERSION",
    "DATA_DIR",
    "WITNESS_FLOOR_FILE",
    "HISTOGRAM_Z_THRESHOLD",
    "MEAN_Z_THRESHOLD",
    "FREQUENCY_Z_THRESHOLD",
    "FREQUENCY_CEILING",
    "MIN_STATISTICAL_TRIALS",
    "FLOAT_GUARD",
    "SQRT_BOUND_DENOMINATOR",
    "COLLISION_NUMERATOR",
    "CENTRAL_BINOMIAL_NUMERATOR",
    "EDGE_MASS_NUMERATOR",
    "MARKOV_FACTOR",
    "HOEFFDING_MIN_N",
    "SWEEP_MAX_N",
    "CONSTANT_GRID_KS",
    "CONSTANT_GRID_EPSS",
]

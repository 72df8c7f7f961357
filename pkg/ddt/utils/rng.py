"""Counter-based random streams.

Every randomized operation draws from ``stream(seed, index)``: a Philox
generator keyed by the pair, so a trial's draws depend only on the master
seed and the trial index, never on the order in which trials run.
"""
from __future__ import annotations

import numpy as np


def stream(seed: int, index: int = 0) -> np.random.Generator:
    if seed < 0 or index < 0:
        raise ValueError("seed and stream index must be non-negative")
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, index])))


def fair_bits(rng: np.random.Generator, n: int) -> np.ndarray:
    """One fair 0/1 draw per vertex as a uint8 vector."""
    return rng.integers(0, 2, size=n, dtype=np.uint8)


def fair_bits_mask(rng: np.random.Generator, n: int) -> int:
    """The draws of ``fair_bits`` packed into an int mask (bit v = vertex v)."""
    if n == 0:
        return 0
    bits = fair_bits(rng, n)
    return int.from_bytes(np.packbits(bits, bitorder="little").tobytes(), "little")


def subset_matrix(n: int, seed: int, start: int, stop: int) -> np.ndarray:
    """Rows ``start..stop-1`` of the trial/vertex membership matrix; row i equals trial i's subset."""
    matrix = np.zeros((stop - start, n), dtype=np.uint8)
    for row, index in enumerate(range(start, stop)):
        if n:
            matrix[row] = fair_bits(stream(seed, index), n)
    return matrix

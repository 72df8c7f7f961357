"""Generators for the planted graph families and Erdős random graphs.

Components always occupy contiguous vertex blocks: clique ``i`` of
``disjoint_cliques(m, k)`` is ``{i*k, ..., i*k + k - 1}``, and copy ``c`` of
``complement_blowup(k, b, n)`` is the block of ``n*b/k`` vertices starting at
``c*n*b/k``.
"""
from __future__ import annotations

import logging
from typing import List

import numpy as np

from ddt.errors import InvalidSpecError
from ddt.models.families import FamilySpec
from ddt.models.graph import Graph, VertexSet
from ddt.utils.rng import stream

logger = logging.getLogger(__name__)


def disjoint_cliques(m: int, k: int) -> Graph:
    """``m`` disjoint copies of ``K_k`` on ``m*k`` vertices."""
    if m < 1 or k < 1:
        raise InvalidSpecError(f"disjoint_cliques needs m, k >= 1, got m={m}, k={k}")
    block = (1 << k) - 1
    rows = []
    for i in range(m):
        clique = block << (i * k)
        rows.extend(clique & ~(1 << (i * k + j)) for j in range(k))
    return Graph(m * k, tuple(rows))


def complement_blowup(k: int, b: int, n: int) -> Graph:
    """``k/b`` disjoint copies of the complement of ``n/k`` disjoint cliques of size ``b``.

    Within a copy, vertex ``i`` belongs to inner clique ``i // b``; two vertices of a
    copy are adjacent exactly when their inner cliques differ.
    """
    if k < 1 or b < 1 or n < 1:
        raise InvalidSpecError(f"complement_blowup needs positive k, b, n, got k={k}, b={b}, n={n}")
    if b > k or k % b or n % k:
        raise InvalidSpecError(f"complement_blowup needs b <= k, b | k and k | n, got k={k}, b={b}, n={n}")
    copies = k // b
    copy_size = n // copies
    rows: List[int] = []
    for c in range(copies):
        start = c * copy_size
        copy_mask = ((1 << copy_size) - 1) << start
        for i in range(copy_size):
            inner = i // b
            inner_mask = ((1 << b) - 1) << (start + inner * b)
            rows.append(copy_mask & ~inner_mask)
    return Graph(n, tuple(rows))


def random_graph(n: int, p: float, seed: int) -> Graph:
    """G(n, p): each pair independently an edge with probability ``p``.

    One uniform draw per pair in upper-triangle row order, so the graph depends only on
    ``(n, p, seed)``.
    """
    if not 0 <= p <= 1:
        raise InvalidSpecError(f"edge probability must lie in [0, 1], got {p}")
    if n < 0:
        raise InvalidSpecError(f"negative vertex count {n}")
    rows = [0] * n
    if n < 2:
        return Graph(n, tuple(rows))
    upper_u, upper_v = np.triu_indices(n, k=1)
    draws = stream(seed).random(upper_u.size)
    chosen = draws < p
    for u, v in zip(upper_u[chosen].tolist(), upper_v[chosen].tolist()):
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def planted_parts(spec: FamilySpec) -> List[VertexSet]:
    """The ground-truth components of a planted family, in vertex order."""
    if spec.family == "disjoint_cliques":
        size, count = spec.k, spec.m
    elif spec.family == "complement_blowup":
        count = spec.k // spec.b
        size = spec.n // count
    else:
        raise InvalidSpecError("random graphs have no planted parts")
    n = size * count
    block = (1 << size) - 1
    return [VertexSet(n, block << (i * size)) for i in range(count)]


def build_family(spec: FamilySpec) -> Graph:
    logger.debug(f"building {spec.describe()}")
    if spec.family == "disjoint_cliques":
        return disjoint_cliques(spec.m, spec.k)
    if spec.family == "complement_blowup":
        return complement_blowup(spec.k, spec.b, spec.n)
    return random_graph(spec.n, spec.p, spec.seed)

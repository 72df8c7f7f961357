"""Distinct degrees of induced subgraphs: exact f(G), randomized witnesses and the degree graph."""
from __future__ import annotations

import logging
import math
from fractions import Fraction
from typing import Dict, Optional

from config import settings
from ddt.constants import EDGE_MASS_NUMERATOR, SQRT_BOUND_DENOMINATOR
from ddt.errors import CapabilityExceededError, PreconditionError
from ddt.models.graph import Graph, VertexSet
from ddt.models.witnesses import DegreeClasses, DiversityWitness
from ddt.services.graph_core import distance_histogram
from ddt.utils.bitset import iter_bits, masks_of_size
from ddt.utils.exact import sum_inverse_sqrt
from ddt.utils.rng import fair_bits_mask, stream

logger = logging.getLogger(__name__)


def degree_classes(g: Graph, u: VertexSet) -> DegreeClasses:
    """Group the vertices of ``u`` by their degree in ``G[u]``, degrees ascending."""
    g.check_subset(u)
    buckets: Dict[int, int] = {}
    adj = g.adj
    mask = u.mask
    for v in iter_bits(mask):
        d = (adj[v] & mask).bit_count()
        buckets[d] = buckets.get(d, 0) | (1 << v)
    classes = tuple((d, VertexSet(g.n, buckets[d])) for d in sorted(buckets))
    return DegreeClasses(subset=u, classes=classes)


def _distinct_count(adj, mask: int) -> int:
    return len({(adj[v] & mask).bit_count() for v in iter_bits(mask)})


def distinct_degree_count(g: Graph, u: VertexSet) -> int:
    g.check_subset(u)
    return _distinct_count(g.adj, u.mask)


def witness_for(g: Graph, u: VertexSet) -> DiversityWitness:
    classes = degree_classes(g, u)
    return DiversityWitness(
        subset=u,
        distinct_count=classes.distinct_count,
        representatives=classes.representatives(),
    )


def _upper_bound(size: int) -> int:
    # degrees 0 and size-1 cannot coexist, so size >= 2 vertices give at most size-1 values
    return size if size <= 1 else size - 1


def f_exact(g: Graph, guard: Optional[int] = None) -> DiversityWitness:
    """Maximum number of distinct degrees over all induced subgraphs.

    The witness is the smallest subset reaching the maximum, smallest mask among those.
    """
    limit = settings.enumeration_guard_n if guard is None else guard
    if g.n > limit:
        raise CapabilityExceededError("f_exact", g.n, limit, "use randomized_witness for a certified lower bound")
    adj = g.adj
    best = 0
    for size in range(g.n, 0, -1):
        cap = _upper_bound(size)
        if cap <= best:
            break
        for mask in masks_of_size(g.n, size):
            count = _distinct_count(adj, mask)
            if count > best:
                best = count
                if best == cap:
                    break
    if best == 0:
        return witness_for(g, VertexSet.empty(g.n))
    first_size = 1 if best == 1 else best + 1
    for size in range(first_size, g.n + 1):
        for mask in masks_of_size(g.n, size):
            if _distinct_count(adj, mask) == best:
                logger.debug(f"f_exact: n={g.n} f={best} witness size={size}")
                return witness_for(g, VertexSet(g.n, mask))
    raise AssertionError("maximum found in the first pass must be reachable")


def sample_subset(n: int, seed: int, index: int = 0) -> VertexSet:
    """The 1/2-random subset drawn by trial ``index`` of the stream keyed by ``seed``."""
    return VertexSet(n, fair_bits_mask(stream(seed, index), n))


def randomized_witness(g: Graph, trials: int, seed: int) -> DiversityWitness:
    """Best distinct-degree witness over ``trials`` independent 1/2-random subsets.

    The result is a certified lower bound on f(G): its subset is returned and re-checkable.
    """
    if trials < 1:
        raise PreconditionError(f"trials must be at least 1, got {trials}")
    best: Optional[DiversityWitness] = None
    for index in range(trials):
        candidate = witness_for(g, sample_subset(g.n, seed, index))
        if best is None or candidate.sort_key() < best.sort_key():
            best = candidate
    logger.info(f"randomized_witness: n={g.n} trials={trials} seed={seed} distinct={best.distinct_count}")
    return best


def sqrt_diversity_bound(n: int, hom_value: int) -> float:
    """``(1/250) * sqrt(n / hom)``, the lower bound on f(G) for every n-vertex graph."""
    if hom_value < 1:
        raise PreconditionError(f"hom must be at least 1, got {hom_value}")
    return math.sqrt(n / hom_value) / SQRT_BOUND_DENOMINATOR


def dhat(g: Graph, w: VertexSet) -> float:
    """Sum over pairs of ``w`` of ``5 / sqrt(delta + 1)``."""
    return sum_inverse_sqrt(distance_histogram(g, w), scale=EDGE_MASS_NUMERATOR)


def dhat_lower_bound(size: int, k: int) -> Fraction:
    """``(|W|^2 - 3k|W|) / 54k``."""
    return Fraction(size * size - 3 * k * size, 54 * k)


def dhat_lower_bound_holds(g: Graph, w: VertexSet, k: int) -> bool:
    """``dhat(W) > (|W|^2 - 3k|W|) / 54k``, which holds whenever f(G) < k; vacuous for W empty."""
    size = len(w)
    if size == 0:
        return True
    return dhat(g, w) > dhat_lower_bound(size, k)

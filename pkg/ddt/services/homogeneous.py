"""Largest cliques and independent sets, hom(G), and the Caro–Wei bound."""
from __future__ import annotations

import logging
from fractions import Fraction
from typing import List, Optional, Tuple

import numpy as np

from config import settings
from ddt.errors import CapabilityExceededError, DDTError
from ddt.models.graph import Graph, VertexSet
from ddt.models.witnesses import CaroWeiBound, HomKind, HomResult, HomWitness
from ddt.services.graph_core import complement, degrees, edge_count
from ddt.utils.bitset import iter_bits, lowest_bit
from ddt.utils.exact import sum_reciprocals
from ddt.utils.rng import stream

logger = logging.getLogger(__name__)


class _CliqueSearch:
    """Branch-and-bound maximum clique with greedy-colouring bounds over bitsets.

    Vertices are relabelled by descending degree (ties by index) so that the lowest set
    bit of a candidate mask is always the next vertex in the static order.
    """

    def __init__(self, g: Graph):
        order = sorted(range(g.n), key=lambda v: (-g.adj[v].bit_count(), v))
        self.labels = order
        position = {v: i for i, v in enumerate(order)}
        self.adj = [0] * g.n
        for i, v in enumerate(order):
            row = 0
            for u in iter_bits(g.adj[v]):
                row |= 1 << position[u]
            self.adj[i] = row
        self.best: List[int] = []
        self.nodes = 0

    def _colour_sort(self, candidates: int) -> Tuple[List[int], List[int]]:
        order: List[int] = []
        bounds: List[int] = []
        uncoloured = candidates
        colour = 0
        while uncoloured:
            colour += 1
            available = uncoloured
            while available:
                v = lowest_bit(available)
                bit = 1 << v
                available &= ~self.adj[v] & ~bit
                uncoloured &= ~bit
                order.append(v)
                bounds.append(colour)
        return order, bounds

    def _expand(self, current: List[int], candidates: int) -> None:
        self.nodes += 1
        order, bounds = self._colour_sort(candidates)
        for i in range(len(order) - 1, -1, -1):
            if len(current) + bounds[i] <= len(self.best):
                return
            v = order[i]
            current.append(v)
            narrowed = candidates & self.adj[v]
            if narrowed:
                self._expand(current, narrowed)
            elif len(current) > len(self.best):
                self.best = list(current)
            current.pop()
            candidates &= ~(1 << v)

    def run(self) -> List[int]:
        if self.adj:
            self._expand([], (1 << len(self.adj)) - 1)
        return sorted(self.labels[i] for i in self.best)


def _check_guard(g: Graph, guard: Optional[int], operation: str) -> None:
    limit = settings.exact_guard_n if guard is None else guard
    if g.n > limit:
        raise CapabilityExceededError(
            operation, g.n, limit, "raise the guard or use hom(..., allow_estimate=True)"
        )


def _verify_witness(g: Graph, witness: HomWitness) -> None:
    members = witness.members.mask
    for v in iter_bits(members):
        others = members & ~(1 << v)
        inside = g.adj[v] & others
        if witness.kind == "clique" and inside != others:
            raise DDTError(f"clique witness broken at vertex {v}")
        if witness.kind == "independent" and inside:
            raise DDTError(f"independent witness broken at vertex {v}")


def _exact(g: Graph, kind: HomKind, guard: Optional[int]) -> HomWitness:
    operation = "max_clique" if kind == "clique" else "max_independent_set"
    _check_guard(g, guard, operation)
    searched = g if kind == "clique" else complement(g)
    search = _CliqueSearch(searched)
    members = search.run()
    logger.debug(f"{operation}: n={g.n} size={len(members)} nodes={search.nodes}")
    witness = HomWitness(kind, VertexSet.from_vertices(g.n, members))
    _verify_witness(g, witness)
    return witness


def max_clique(g: Graph, guard: Optional[int] = None) -> HomWitness:
    """Maximum clique by branch and bound; raises above the exact-search guard."""
    return _exact(g, "clique", guard)


def max_independent_set(g: Graph, guard: Optional[int] = None) -> HomWitness:
    """Maximum independent set, found as a maximum clique of the complement."""
    return _exact(g, "independent", guard)


def greedy_clique(g: Graph) -> HomWitness:
    """Greedy clique: repeatedly take the candidate with most candidate neighbours."""
    members = 0
    candidates = (1 << g.n) - 1
    while candidates:
        v = max(iter_bits(candidates), key=lambda u: ((g.adj[u] & candidates).bit_count(), -u))
        members |= 1 << v
        candidates &= g.adj[v]
    return HomWitness("clique", VertexSet(g.n, members))


def hom(g: Graph, guard: Optional[int] = None, allow_estimate: bool = False, seed: int = 0) -> HomResult:
    """Size of the largest homogeneous set with a witness.

    Above the guard, ``allow_estimate`` returns the better of a greedy clique and a
    Caro–Wei greedy independent set, flagged ``exact=False``.
    """
    limit = settings.exact_guard_n if guard is None else guard
    if g.n > limit:
        if not allow_estimate:
            _check_guard(g, limit, "hom")
        clique = greedy_clique(g)
        independent = HomWitness("independent", caro_wei_greedy(g, seed))
        best = clique if clique.size >= independent.size else independent
        logger.info(f"hom estimated for n={g.n} above guard {limit}: {best.size} ({best.kind})")
        return HomResult(best.size, best, exact=False)
    clique = max_clique(g, guard=limit)
    independent = max_independent_set(g, guard=limit)
    best = clique if clique.size >= independent.size else independent
    return HomResult(best.size, best, exact=True)


def caro_wei_sum(g: Graph) -> CaroWeiBound:
    """Exact sum of 1/(deg(v)+1) and the bound v(G)^2/(2e(G)+v(G))."""
    total = sum_reciprocals(_degree_histogram(g))
    denominator = 2 * edge_count(g) + g.n
    turan = Fraction(g.n * g.n, denominator) if denominator else Fraction(0)
    return CaroWeiBound(sum=total, turan=turan)


def _degree_histogram(g: Graph) -> dict:
    histogram: dict = {}
    for d in degrees(g):
        histogram[d] = histogram.get(d, 0) + 1
    return histogram


def caro_wei_greedy(g: Graph, seed: int, index: int = 0) -> VertexSet:
    """Vertices that precede all their neighbours in a uniformly random order."""
    rank = stream(seed, index).permutation(g.n)
    keep = 0
    for v in range(g.n):
        if all(rank[v] < rank[u] for u in iter_bits(g.adj[v])):
            keep |= 1 << v
    return VertexSet(g.n, keep)


def caro_wei_greedy_mean(g: Graph, trials: int, seed: int) -> Tuple[float, float]:
    """Mean and standard deviation of the greedy independent-set size over ``trials`` streams."""
    sizes = np.array([len(caro_wei_greedy(g, seed, index)) for index in range(trials)], dtype=float)
    return float(sizes.mean()), float(sizes.std(ddof=1)) if trials > 1 else 0.0

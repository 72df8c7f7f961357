"""Degree-collision probabilities under a 1/2-random vertex subset.

For distinct x, y let s = |N(x) - N(y)| and t = |N(y) - N(x)|. Common neighbours
contribute equally to both degrees, so P(deg_U(x) = deg_U(y)) is
2^-(s+t) * sum_i C(s,i) C(t,i), which by Vandermonde equals C(s+t, t) / 2^(s+t).
"""
from __future__ import annotations

import logging
import math
import threading
from collections import Counter
from fractions import Fraction
from math import comb
from typing import List, Optional

from cachetools import LRUCache, cached
from scipy.special import gammaln

from config import settings
from ddt.constants import CENTRAL_BINOMIAL_NUMERATOR, EDGE_MASS_NUMERATOR, COLLISION_NUMERATOR
from ddt.errors import CapabilityExceededError, DDTError, InvalidPairError, PreconditionError
from ddt.models.collision import CollisionParams, DegreeGraphExpectation, PairMassChain, ExactProb
from ddt.models.graph import Graph
from ddt.services.graph_core import distance_histogram, distance_table
from ddt.utils.exact import less_than_over_sqrt, sum_inverse_sqrt, sum_reciprocals

logger = logging.getLogger(__name__)


@cached(cache=LRUCache(maxsize=65536), lock=threading.Lock())
def _exact_collision(s: int, t: int) -> Fraction:
    summed = sum(comb(s, i) * comb(t, i) for i in range(min(s, t) + 1))
    closed = comb(s + t, t)
    if summed != closed:
        raise DDTError(f"Vandermonde identity failed at s={s}, t={t}")
    return Fraction(closed, 1 << (s + t))


def collision_prob_exact(s: int, t: int, guard: Optional[int] = None) -> ExactProb:
    """Exact ``2^-(s+t) sum C(s,i)C(t,i)``, checked against ``C(s+t,t)/2^(s+t)``.

    Above the big-int guard the value comes from log-gamma in floating point and is
    flagged ``exact=False``.
    """
    if s < 0 or t < 0:
        raise PreconditionError(f"negative counts s={s}, t={t}")
    limit = settings.bigint_guard if guard is None else guard
    if s + t <= limit:
        return ExactProb(_exact_collision(s, t))
    log_value = gammaln(s + t + 1) - gammaln(s + 1) - gammaln(t + 1) - (s + t) * math.log(2.0)
    logger.debug(f"collision probability for s+t={s + t} above guard {limit}; using log-gamma")
    return ExactProb(Fraction(float(math.exp(log_value))), exact=False)


def collision_params(g: Graph, x: int, y: int) -> CollisionParams:
    g.check_vertex(x)
    g.check_vertex(y)
    if x == y:
        raise InvalidPairError(f"collision parameters need distinct vertices, got {x} twice")
    nx_, ny = g.adj[x], g.adj[y]
    return CollisionParams(
        s=(nx_ & ~ny).bit_count(),
        t=(ny & ~nx_).bit_count(),
        edge=bool(nx_ >> y & 1),
    )


def collision_prob_pair(g: Graph, x: int, y: int, guard: Optional[int] = None) -> ExactProb:
    """P(deg_U(x) = deg_U(y)) over the full 1/2-random U, not conditioned on x, y ∈ U."""
    params = collision_params(g, x, y)
    return collision_prob_exact(params.s, params.t, guard)


def in_subset_collision_prob(g: Graph, x: int, y: int, guard: Optional[int] = None) -> ExactProb:
    """P(deg_U(x) = deg_U(y) | x, y ∈ U).

    For an edge xy, conditioning on both endpoints adds one to each degree, so the
    private neighbourhoods shrink to s-1 and t-1.
    """
    params = collision_params(g, x, y)
    if params.edge:
        return collision_prob_exact(params.s - 1, params.t - 1, guard)
    return collision_prob_exact(params.s, params.t, guard)


def collision_bound(delta: int) -> float:
    """``20 / sqrt(delta + 1)``."""
    if delta < 0:
        raise PreconditionError(f"negative distance {delta}")
    return COLLISION_NUMERATOR / math.sqrt(delta + 1)


def collision_bound_holds(prob: ExactProb, delta: int) -> bool:
    """Exact test of ``prob < 20 / sqrt(delta + 1)``."""
    return less_than_over_sqrt(prob.value, COLLISION_NUMERATOR, delta + 1)


def central_binomial(s: int) -> Fraction:
    """``2^-s * C(s, floor(s/2))``."""
    return Fraction(comb(s, s // 2), 1 << s)


def central_binomial_holds(s: int) -> bool:
    """Exact test of ``2^-s C(s, floor(s/2)) < 10 / sqrt(s + 1)`` by squaring."""
    middle = comb(s, s // 2)
    return middle * middle * (s + 1) < CENTRAL_BINOMIAL_NUMERATOR ** 2 * 4 ** s


def central_binomial_failures(s_max: int, numerator: int = CENTRAL_BINOMIAL_NUMERATOR) -> List[int]:
    """Every ``s <= s_max`` with ``2^-s C(s, floor(s/2)) >= numerator / sqrt(s + 1)``.

    The middle coefficient and ``4^s`` are carried forward instead of recomputed, using
    C(2j+1, j) = C(2j, j)(2j+1)/(j+1) and C(2j+2, j+1) = 2 C(2j+1, j).
    """
    failures = []
    middle, power = 1, 1
    scale = numerator * numerator
    for s in range(s_max + 1):
        if middle * middle * (s + 1) >= scale * power:
            failures.append(s)
        j = s // 2
        middle = middle * (s + 1) // (j + 1) if s % 2 == 0 else 2 * middle
        power <<= 2
    return failures


def _pair_guard(g: Graph, operation: str) -> None:
    if g.n > settings.pair_guard_n:
        raise CapabilityExceededError(operation, g.n, settings.pair_guard_n, "pair sums are quadratic in n")


def expected_degree_graph_edges(g: Graph, guard: Optional[int] = None) -> DegreeGraphExpectation:
    """Expected number of edges of the degree graph D on a 1/2-random U."""
    _pair_guard(g, "expected_degree_graph_edges")
    unconditional: Counter = Counter()
    conditional: Counter = Counter()
    all_exact = True
    for x in range(g.n):
        for y in range(x + 1, g.n):
            params = collision_params(g, x, y)
            unconditional[(params.s, params.t)] += 1
            if params.edge:
                conditional[(params.s - 1, params.t - 1)] += 1
            else:
                conditional[(params.s, params.t)] += 1
    unconditional_sum = Fraction(0)
    for (s, t), count in unconditional.items():
        prob = collision_prob_exact(s, t, guard)
        all_exact &= prob.exact
        unconditional_sum += count * prob.value
    exact = Fraction(0)
    for (s, t), count in conditional.items():
        prob = collision_prob_exact(s, t, guard)
        all_exact &= prob.exact
        exact += count * prob.value
    bound = sum_inverse_sqrt(distance_histogram(g), scale=EDGE_MASS_NUMERATOR)
    return DegreeGraphExpectation(
        unconditional_sum=unconditional_sum / 4,
        exact=exact / 4,
        bound=bound,
        all_exact=all_exact,
    )


def distance_mass(g: Graph, x: int) -> Fraction:
    """Exact ``sum_{y != x} 1 / (delta(x, y) + 1)``."""
    g.check_vertex(x)
    row = distance_table(g)[x]
    histogram = Counter(d for y, d in enumerate(row) if y != x)
    return sum_reciprocals(histogram)


def pair_mass_chain(g: Graph, hom_value: int) -> PairMassChain:
    """Both sides of ``n*hom >= sum 1/(delta+1) >= C(n,2)^-1 (sum 1/sqrt(delta+1))^2``."""
    _pair_guard(g, "pair_mass_chain")
    histogram = distance_histogram(g)
    pairs = g.n * (g.n - 1) // 2
    root_sum = sum_inverse_sqrt(histogram)
    return PairMassChain(
        n_hom=g.n * hom_value,
        reciprocal_sum=sum_reciprocals(histogram),
        cauchy_schwarz=root_sum * root_sum / pairs if pairs else 0.0,
    )

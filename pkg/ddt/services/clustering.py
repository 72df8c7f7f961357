"""Neighbourhood-distance clustering and the degree-bounded structure behind it.

The constants of the large-homogeneous-set argument only make the partition
meaningful for astronomically large n, so ``partition`` takes explicit
``ClusterParams`` and ``proof_constants`` is checked at formula level.
"""
from __future__ import annotations

import logging
import math
from fractions import Fraction
from typing import List, Optional, Tuple

from ddt.errors import DDTError, PreconditionError, UndefinedRError
from ddt.models.clustering import (
    ClusterParams,
    ClusterResult,
    IndependentCore,
    Orientation,
    PartitionReport,
    PropertyCheck,
    ProofConstants,
    Side,
)
from ddt.models.graph import Graph, VertexSet
from ddt.services.graph_core import complement, degrees, distance_table, max_degree
from ddt.utils.bitset import iter_bits

logger = logging.getLogger(__name__)

J_IDENTITY_TOLERANCE = 1e-12


def proof_constants(k: int, eps: float) -> ProofConstants:
    """Evaluate beta, eta, J, K, Delta and L for target ``k`` and slack ``eps``.

    Args:
        k: Target number of distinct degrees, at least 2.
        eps: Slack in (0, 1/2).

    Raises:
        PreconditionError: ``k`` or ``eps`` out of range.
        DDTError: the two printed forms of J disagree, or a constant is not finite.
    """
    if k < 2:
        raise PreconditionError(f"k must be at least 2, got {k}")
    if not 0 < eps < 0.5:
        raise PreconditionError(f"eps must lie in (0, 1/2), got {eps}")
    beta = eps / (10 * k)
    eta = eps * beta / (1e5 * k ** 2)
    eta_variant = eps * beta / (1e5 * k)
    power = 2.0 ** (4 * k)
    J = 1e4 * float(k) ** 12 * power / eta ** 4
    J_alt = 1e24 * float(k) ** 20 * power / (eps * beta) ** 4
    if not math.isclose(J, J_alt, rel_tol=J_IDENTITY_TOLERANCE):
        raise DDTError(f"J forms disagree for k={k}, eps={eps}: {J!r} vs {J_alt!r}")
    K = 2 * (1e6 * k ** 2 + J * math.log(1e4 * k) / math.log(1 + beta / 2))
    Delta = 4 * K
    L = (Delta ** 2 + 1) * k
    values = (beta, eta, eta_variant, J, J_alt, K, Delta, L)
    if not all(math.isfinite(v) and v > 0 for v in values):
        raise DDTError(f"non-finite or non-positive constant for k={k}, eps={eps}")
    return ProofConstants(
        k=k, eps=eps, beta=beta, eta=eta, eta_variant=eta_variant,
        J=J, J_alt=J_alt, K=K, Delta=Delta, L=L,
    )


def distinct_degree_margin(constants: ProofConstants, eta: Optional[float] = None) -> float:
    """``(1 - beta - m_max*eta)(k - 1 + eps) - (k - 1)`` with ``m_max = 1e4 k / beta``.

    Positive means the final counting step closes. With the k^2 form of eta it always
    does; the k form fails once k is large enough.
    """
    eta = constants.eta if eta is None else eta
    k, eps, beta = constants.k, constants.eps, constants.beta
    m_max = 1e4 * k / beta
    return (1 - beta - m_max * eta) * (k - 1 + eps) - (k - 1)


def max_dependents(delta: int) -> int:
    """With max degree ``delta`` a vertex is dependent on at most ``delta + delta(delta-1)`` others."""
    return delta * delta


def core_size_guarantee(candidates: int, k: int) -> Fraction:
    """Greedy selection keeps at least ``|S3| / k^2`` pairwise independent vertices."""
    return Fraction(candidates, k * k)


def _pick_seed(table, remaining: int, radius: float) -> Tuple[int, int]:
    best_vertex, best_ball = -1, 0
    best_size = -1
    for w in iter_bits(remaining):
        row = table[w]
        ball = 0
        for x in iter_bits(remaining):
            if x != w and row[x] < radius:
                ball |= 1 << x
        size = ball.bit_count()
        if size > best_size:
            best_vertex, best_ball, best_size = w, ball, size
    return best_vertex, best_ball


def partition(g: Graph, p: ClusterParams) -> ClusterResult:
    """Seed-and-grow partition of V into clusters of close vertices plus a leftover set.

    A seed w needs more than ``seed_frac*|W|`` other vertices at distance below
    ``seed_radius``. The cluster then absorbs, in one batch, every remaining vertex
    within ``link_dist`` of it while the batch has at least ``growth_ratio*|C|``
    vertices; a smaller final batch goes to the leftover set.
    """
    table = distance_table(g)
    remaining = (1 << g.n) - 1
    leftover = 0
    clusters: List[int] = []
    while remaining:
        w, ball = _pick_seed(table, remaining, p.seed_radius)
        if ball.bit_count() <= p.seed_frac * remaining.bit_count():
            leftover |= remaining
            break
        cluster = ball | (1 << w)
        while True:
            fringe = 0
            for x in iter_bits(remaining & ~cluster):
                row = table[x]
                if any(row[y] <= p.link_dist for y in iter_bits(cluster)):
                    fringe |= 1 << x
            if fringe and fringe.bit_count() >= p.growth_ratio * cluster.bit_count():
                cluster |= fringe
                continue
            break
        remaining &= ~(cluster | fringe)
        leftover |= fringe
        if cluster.bit_count() <= p.min_cluster_frac * g.n:
            leftover |= cluster
            logger.debug(f"partition: cluster of {cluster.bit_count()} below minimum size moved to leftover")
            continue
        clusters.append(cluster)
    result = _certify(g, table, clusters, leftover)
    logger.info(
        f"partition: n={g.n} clusters={len(result.clusters)} leftover={len(result.leftover)} "
        f"max_intra={result.max_intra} min_inter={result.min_inter}"
    )
    return result


def _certify(g: Graph, table, clusters: List[int], leftover: int) -> ClusterResult:
    max_intra = 0
    min_inter: Optional[int] = None
    owner = {}
    for index, mask in enumerate(clusters):
        for v in iter_bits(mask):
            owner[v] = index
    for x, i in owner.items():
        row = table[x]
        for y, j in owner.items():
            if y <= x:
                continue
            if i == j:
                max_intra = max(max_intra, row[y])
            elif min_inter is None or row[y] < min_inter:
                min_inter = row[y]
    return ClusterResult(
        clusters=tuple(VertexSet(g.n, mask) for mask in clusters),
        leftover=VertexSet(g.n, leftover),
        max_intra=max_intra,
        min_inter=min_inter,
    )


def validate_partition(
    g: Graph,
    r: ClusterResult,
    K: float,
    J: float,
    min_size: int,
    max_leftover: int,
) -> PartitionReport:
    """Check cover, cluster size, intra distance < K and inter distance > J, with witnesses."""
    table = distance_table(g)
    properties: List[PropertyCheck] = []

    seen = r.leftover.mask
    overlap: List[int] = []
    for cluster in r.clusters:
        g.check_subset(cluster)
        overlap.extend(iter_bits(seen & cluster.mask))
        seen |= cluster.mask
    missing = list(iter_bits(((1 << g.n) - 1) & ~seen))
    properties.append(PropertyCheck(
        name="disjoint-cover",
        passed=not overlap and not missing,
        detail=f"{len(overlap)} repeated, {len(missing)} uncovered",
        witness=(overlap or missing)[:1] or None,
    ))

    properties.append(PropertyCheck(
        name="covered",
        passed=len(r.leftover) <= max_leftover,
        detail=f"leftover {len(r.leftover)} vs allowed {max_leftover}",
        witness=r.leftover.vertices() if len(r.leftover) > max_leftover else None,
    ))

    small = next((c for c in r.clusters if len(c) < min_size), None)
    properties.append(PropertyCheck(
        name="cluster-size",
        passed=small is None,
        detail=f"every cluster has at least {min_size} vertices" if small is None
        else f"cluster of {len(small)} below {min_size}",
        witness=small.vertices() if small is not None else None,
    ))

    intra: Optional[List[int]] = None
    for cluster in r.clusters:
        members = cluster.vertices()
        for i, x in enumerate(members):
            for y in members[i + 1:]:
                if not table[x][y] < K:
                    intra = [x, y]
                    break
            if intra:
                break
        if intra:
            break
    properties.append(PropertyCheck(
        name="intra-distance",
        passed=intra is None,
        detail=f"delta < {K} inside clusters" if intra is None
        else f"delta({intra[0]}, {intra[1]}) = {table[intra[0]][intra[1]]}",
        witness=intra,
    ))

    inter: Optional[List[int]] = None
    for i, first in enumerate(r.clusters):
        for second in r.clusters[i + 1:]:
            for x in first:
                row = table[x]
                y = next((y for y in second if not row[y] > J), None)
                if y is not None:
                    inter = [x, y]
                    break
            if inter:
                break
        if inter:
            break
    properties.append(PropertyCheck(
        name="inter-distance",
        passed=inter is None,
        detail=f"delta > {J} across clusters" if inter is None
        else f"delta({inter[0]}, {inter[1]}) = {table[inter[0]][inter[1]]}",
        witness=inter,
    ))
    return PartitionReport(passed=all(p.passed for p in properties), properties=properties)


def _oriented_rows(g: Graph, orientation: Orientation) -> Tuple[int, ...]:
    return g.adj if orientation == "graph" else complement(g).adj


def s_independent(g: Graph, s: VertexSet, x: int, y: int, in_complement: bool = False) -> bool:
    """Closed neighbourhoods of ``x`` and ``y`` inside ``s`` are disjoint (in G, or in its complement)."""
    g.check_subset(s)
    if x not in s or y not in s:
        raise PreconditionError(f"vertices {x} and {y} must both lie in the set")
    if x == y:
        raise PreconditionError(f"independence needs distinct vertices, got {x} twice")
    rows = _oriented_rows(g, "complement" if in_complement else "graph")
    closed_x = (rows[x] & s.mask) | (1 << x)
    closed_y = (rows[y] & s.mask) | (1 << y)
    return not closed_x & closed_y


def compute_r(a_size: int, n: int, k: int, eps: float, eta: float) -> int:
    """The unique r >= 0 with ``r*n/(k-1+eps) < |A| - eta*n <= (r+1)*n/(k-1+eps)``.

    Evaluated in exact rationals from the binary values of ``eps`` and ``eta``.
    """
    if n < 1 or k < 2:
        raise PreconditionError(f"need n >= 1 and k >= 2, got n={n}, k={k}")
    excess = a_size - Fraction(eta) * n
    if excess <= 0:
        raise UndefinedRError(f"|A| - eta*n = {float(excess):.6g} is not positive")
    width = Fraction(n) / (k - 1 + Fraction(eps))
    r = math.ceil(excess / width) - 1
    if not (r * width < excess <= (r + 1) * width):
        raise DDTError(f"interval arithmetic failed for |A|={a_size}, n={n}")
    return r


def _masked_degree(rows: Tuple[int, ...], v: int, mask: int) -> int:
    return (rows[v] & mask).bit_count()


def independent_core(g: Graph, a: VertexSet, k: int, r: int) -> IndependentCore:
    """Pairwise A-independent vertices of A whose degree inside A lies in ``[r, k-2]``.

    The orientation is the side of G[A] with the smaller maximum degree (ties go to
    the graph). Vertices dependent on a vertex of degree >= k-1 are dropped, then the
    rest are taken greedily in ascending index order.
    """
    if r < 0 or r > k - 2:
        raise PreconditionError(f"r must lie in [0, k-2] = [0, {k - 2}], got {r}")
    g.check_subset(a)
    members = a.vertices()
    size = len(members)
    graph_max = max((_masked_degree(g.adj, v, a.mask) for v in members), default=0)
    complement_max = max((size - 1 - _masked_degree(g.adj, v, a.mask) for v in members), default=0)
    orientation: Orientation = "graph" if graph_max <= complement_max else "complement"
    rows = _oriented_rows(g, orientation)

    closed = {v: (rows[v] & a.mask) | (1 << v) for v in members}
    degree = {v: _masked_degree(rows, v, a.mask) for v in members}
    high = 0
    for v in members:
        if degree[v] >= k - 1:
            high |= closed[v]
    candidates = [v for v in members if r <= degree[v] <= k - 2 and not closed[v] & high]

    core = 0
    taken = 0
    for v in candidates:
        if not closed[v] & taken:
            core |= 1 << v
            taken |= closed[v]
    logger.debug(
        f"independent_core: |A|={size} orientation={orientation} candidates={len(candidates)} "
        f"core={core.bit_count()}"
    )
    return IndependentCore(orientation=orientation, core=VertexSet(g.n, core))


def bounded_degree_side(g: Graph, K: int) -> Side:
    """Side of G whose maximum degree is at most 4K, the smaller one when both qualify."""
    limit = 4 * K
    graph_max = max_degree(g)
    complement_max = max((g.n - 1 - d for d in degrees(g)), default=0)
    qualifying = [(graph_max, 0, "graph"), (complement_max, 1, "complement")]
    qualifying = [entry for entry in qualifying if entry[0] <= limit]
    if not qualifying:
        return "neither"
    return min(qualifying)[2]


def high_degree_count(g: Graph, k: int) -> int:
    """Number of vertices of degree at least k-1."""
    return sum(1 for d in degrees(g) if d >= k - 1)

"""Exhaustive invariant sweep over every labelled graph on at most six vertices.

Graph ``code`` on ``n`` vertices has edge ``pairs[i]`` exactly when bit ``i`` of
the code is set, with pairs in lexicographic order. Work is split into chunks of
codes; chunk summaries merge associatively, so the result does not depend on how
many workers ran them.
"""
from __future__ import annotations

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

import structlog

from config import settings
from ddt.constants import EDGE_MASS_NUMERATOR, SWEEP_MAX_N
from ddt.errors import PreconditionError
from ddt.models.graph import Graph
from ddt.models.reports import Check, VerificationReport
from ddt.services.clustering import bounded_degree_side, high_degree_count
from ddt.services.collision import distance_mass, pair_mass_chain
from ddt.services.degree_diversity import dhat_lower_bound, f_exact, sqrt_diversity_bound
from ddt.services.graph_core import complement, degrees, distance_table, max_degree, max_pair_distance
from ddt.services.homogeneous import caro_wei_sum, hom, max_independent_set
from ddt.utils.bitset import iter_bits

logger = logging.getLogger(__name__)
events = structlog.get_logger(__name__)

CHUNK_SIZE = 2048

CLAIMS = (
    "triangle",
    "complement-delta",
    "complement-hom",
    "complement-f",
    "caro-wei",
    "distance-mass",
    "pair-mass-left",
    "pair-mass-right",
    "bounded-degree-side",
    "high-degree-count",
    "dhat-lower-bound",
    "sqrt-bound",
)


@dataclass
class ClaimTally:
    """Graphs checked for one claim, the first counterexample and the smallest slack seen."""

    checked: int = 0
    failures: int = 0
    counterexample: Optional[Tuple[int, int]] = None
    tightest: Optional[Tuple[float, int, int]] = None

    def observe(self, n: int, code: int, slack: float) -> None:
        self.checked += 1
        if slack < 0:
            self.failures += 1
            if self.counterexample is None:
                self.counterexample = (n, code)
        if self.tightest is None or (slack, n, code) < self.tightest:
            self.tightest = (slack, n, code)

    def merge(self, other: "ClaimTally") -> None:
        self.checked += other.checked
        self.failures += other.failures
        if other.counterexample is not None:
            if self.counterexample is None or other.counterexample < self.counterexample:
                self.counterexample = other.counterexample
        if other.tightest is not None and (self.tightest is None or other.tightest < self.tightest):
            self.tightest = other.tightest


@dataclass
class SweepSummary:
    graphs: Dict[int, int] = field(default_factory=dict)
    claims: Dict[str, ClaimTally] = field(default_factory=lambda: {c: ClaimTally() for c in CLAIMS})
    min_f_by_hom: Dict[int, Dict[int, int]] = field(default_factory=dict)

    def merge(self, other: "SweepSummary") -> "SweepSummary":
        for n, count in other.graphs.items():
            self.graphs[n] = self.graphs.get(n, 0) + count
        for claim, tally in other.claims.items():
            self.claims[claim].merge(tally)
        for n, table in other.min_f_by_hom.items():
            mine = self.min_f_by_hom.setdefault(n, {})
            for h, f in table.items():
                mine[h] = min(mine.get(h, f), f)
        return self


def graph_from_code(n: int, code: int) -> Graph:
    rows = [0] * n
    index = 0
    for u in range(n):
        for v in range(u + 1, n):
            if code >> index & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            index += 1
    return Graph(n, tuple(rows))


def _equality_slack(same: bool) -> float:
    return 0.0 if same else -1.0


def _dhat_slack(g: Graph, table, k: int) -> float:
    """Smallest ``dhat(W) - (|W|^2 - 3k|W|)/54k`` over non-empty W."""
    weights = [[EDGE_MASS_NUMERATOR / math.sqrt(table[x][y] + 1) for y in range(g.n)] for x in range(g.n)]
    best = math.inf
    for mask in range(1, 1 << g.n):
        members = list(iter_bits(mask))
        total = math.fsum(weights[x][y] for i, x in enumerate(members) for y in members[i + 1:])
        slack = total - float(dhat_lower_bound(len(members), k))
        best = min(best, slack)
    return best


def check_graph(g: Graph) -> Tuple[Dict[str, float], int, int]:
    """Slack of every claim on one graph, with f and hom; a negative slack is a counterexample."""
    slacks: Dict[str, float] = {}
    table = distance_table(g)
    flipped = complement(g)
    flipped_table = distance_table(flipped)

    triangle = math.inf
    for x in range(g.n):
        for y in range(g.n):
            for z in range(g.n):
                if len({x, y, z}) == 3:
                    triangle = min(triangle, table[x][y] + table[y][z] - table[x][z])
    slacks["triangle"] = 0.0 if triangle == math.inf else float(triangle)
    slacks["complement-delta"] = _equality_slack(table == flipped_table)

    result = hom(g, guard=SWEEP_MAX_N)
    slacks["complement-hom"] = _equality_slack(result.size == hom(flipped, guard=SWEEP_MAX_N).size)
    f = f_exact(g, guard=SWEEP_MAX_N).distinct_count
    slacks["complement-f"] = _equality_slack(f == f_exact(flipped, guard=SWEEP_MAX_N).distinct_count)

    alpha = max_independent_set(g, guard=SWEEP_MAX_N).size
    slacks["caro-wei"] = float(alpha - math.ceil(caro_wei_sum(g).sum))

    mass = max((distance_mass(g, x) for x in range(g.n)), default=Fraction(0))
    slacks["distance-mass"] = float(2 * result.size - mass)

    chain = pair_mass_chain(g, result.size)
    slacks["pair-mass-left"] = float(chain.n_hom - chain.reciprocal_sum)
    right = float(chain.reciprocal_sum) - chain.cauchy_schwarz
    # equality cases such as K_n sit inside the float guard band
    slacks["pair-mass-right"] = max(right, 0.0) if chain.right_holds else right

    k_star = max_pair_distance(g)
    side = bounded_degree_side(g, k_star)
    smaller_side = max_degree(g) if side == "graph" else max((g.n - 1 - d for d in degrees(g)), default=0)
    slacks["bounded-degree-side"] = -1.0 if side == "neither" else float(4 * k_star - smaller_side)

    k = f + 1
    delta = max_degree(g)
    slacks["high-degree-count"] = float((delta * delta + 1) * k - high_degree_count(g, k))
    slacks["dhat-lower-bound"] = _dhat_slack(g, table, k) if g.n else 0.0
    slacks["sqrt-bound"] = f - sqrt_diversity_bound(g.n, result.size) if g.n else 0.0
    return slacks, f, result.size


def sweep_chunk(n: int, start: int, stop: int) -> SweepSummary:
    summary = SweepSummary()
    summary.graphs[n] = stop - start
    table = summary.min_f_by_hom.setdefault(n, {})
    for code in range(start, stop):
        slacks, f, h = check_graph(graph_from_code(n, code))
        for claim, slack in slacks.items():
            summary.claims[claim].observe(n, code, slack)
        table[h] = min(table.get(h, f), f)
    return summary


def _chunks(n_max: int) -> List[Tuple[int, int, int]]:
    work = []
    for n in range(n_max + 1):
        total = 1 << (n * (n - 1) // 2)
        for start in range(0, total, CHUNK_SIZE):
            work.append((n, start, min(total, start + CHUNK_SIZE)))
    return work


def exhaustive_small_sweep(n_max: int, threads: Optional[int] = None) -> VerificationReport:
    """Run every per-graph invariant on all labelled graphs with ``n <= n_max <= 6``.

    Args:
        n_max: Largest vertex count swept.
        threads: Worker processes; defaults to ``settings.threads``. One means in-process.
    """
    if not 0 <= n_max <= SWEEP_MAX_N:
        raise PreconditionError(f"n_max must lie in [0, {SWEEP_MAX_N}], got {n_max}")
    workers = settings.threads if threads is None else threads
    work = _chunks(n_max)
    summary = SweepSummary()
    if workers > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(sweep_chunk, *zip(*work)):
                summary.merge(part)
    else:
        for n, start, stop in work:
            summary.merge(sweep_chunk(n, start, stop))

    report = VerificationReport(subject=f"all labelled graphs with n <= {n_max}")
    report.quantities["graphs"] = {str(n): count for n, count in sorted(summary.graphs.items())}
    report.quantities["min_f_by_hom"] = {
        str(n): {str(h): f for h, f in sorted(table.items())} for n, table in sorted(summary.min_f_by_hom.items())
    }
    tightest: Dict[str, Dict[str, float]] = {}
    for claim in CLAIMS:
        tally = summary.claims[claim]
        if tally.tightest is not None:
            slack, n, code = tally.tightest
            tightest[claim] = {"slack": slack, "n": n, "code": code}
        failure = tally.counterexample
        report.add(Check(
            claim=claim,
            passed=failure is None,
            lhs=f"{tally.failures} counterexamples",
            relation="==",
            rhs="0 counterexamples",
            note=f"{tally.checked} graphs" + (f"; first at n={failure[0]} code={failure[1]}" if failure else ""),
        ))
    report.quantities["tightest"] = tightest
    events.info("sweep_complete", n_max=n_max, graphs=sum(summary.graphs.values()), passed=report.passed)
    return report

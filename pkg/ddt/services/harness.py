"""Verification campaigns and Monte-Carlo experiments.

Every check records both sides of its inequality in the report. Trial ``i`` of a
campaign always uses the subset drawn from ``stream(seed, i)``, so re-running with
the recorded seed and trial count reproduces every quantity exactly.
"""
from __future__ import annotations

import json
import logging
import math
from collections import Counter, defaultdict
from fractions import Fraction
from math import comb
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
import structlog

from config import settings
from ddt.constants import (
    FLOAT_GUARD,
    FREQUENCY_CEILING,
    FREQUENCY_Z_THRESHOLD,
    HISTOGRAM_Z_THRESHOLD,
    HOEFFDING_MIN_N,
    MARKOV_FACTOR,
    MEAN_Z_THRESHOLD,
    MIN_STATISTICAL_TRIALS,
    WITNESS_FLOOR_FILE,
)
from ddt.errors import CapabilityExceededError, DDTError, PreconditionError, UndefinedRError
from ddt.models.clustering import ClusterParams
from ddt.models.graph import Graph, VertexSet
from ddt.models.reports import (
    Check,
    HistogramReport,
    HistogramRow,
    RatioReport,
    RatioRow,
    Relation,
    VerificationReport,
)
from ddt.services.clustering import (
    compute_r,
    core_size_guarantee,
    distinct_degree_margin,
    independent_core,
    partition,
    proof_constants,
)
from ddt.services.collision import (
    central_binomial,
    central_binomial_failures,
    collision_bound_holds,
    collision_prob_exact,
    distance_mass,
    expected_degree_graph_edges,
    in_subset_collision_prob,
    pair_mass_chain,
)
from ddt.services.constructions import disjoint_cliques
from ddt.services.degree_diversity import f_exact, randomized_witness, sqrt_diversity_bound
from ddt.services.graph_core import adjacency_matrix, degrees, edge_count
from ddt.services.homogeneous import hom
from ddt.utils.exact import fraction_text
from ddt.utils.rng import subset_matrix

logger = logging.getLogger(__name__)
events = structlog.get_logger(__name__)

TRIAL_CHUNK = 1024


def _text(value: Any) -> str:
    if isinstance(value, Fraction):
        return fraction_text(value)
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _record(
    report: VerificationReport,
    claim: str,
    passed: bool,
    lhs: Any,
    relation: Relation,
    rhs: Any,
    tolerance: Optional[str] = None,
    exact: bool = True,
    note: str = "",
) -> Check:
    check = report.add(Check(
        claim=claim,
        passed=bool(passed),
        lhs=_text(lhs),
        relation=relation,
        rhs=_text(rhs),
        tolerance=tolerance,
        exact=exact,
        note=note,
    ))
    if not check.passed and not check.exact:
        events.warning("check_inconclusive", subject=report.subject, claim=claim, lhs=check.lhs, rhs=check.rhs)
    elif not check.passed:
        events.error("check_failed", subject=report.subject, claim=claim, lhs=check.lhs, rhs=check.rhs)
    else:
        events.debug("check_passed", subject=report.subject, claim=claim, lhs=check.lhs, rhs=check.rhs)
    return check


def _z(mean: float, expected: float, std: float, trials: int) -> float:
    if trials < 2 or std == 0:
        return 0.0 if math.isclose(mean, expected, rel_tol=0.0, abs_tol=1e-12) else math.inf
    return (mean - expected) / (std / math.sqrt(trials))


def _trial_blocks(n: int, seed: int, trials: int):
    """Yield ``(start, bits)`` blocks of the trial/vertex membership matrix."""
    for start in range(0, trials, TRIAL_CHUNK):
        stop = min(trials, start + TRIAL_CHUNK)
        yield start, subset_matrix(n, seed, start, stop)


def _trial_degrees(adjacency: np.ndarray, bits: np.ndarray) -> np.ndarray:
    # float32 products are exact for integer degrees far below 2^24
    return np.rint(bits.astype(np.float32) @ adjacency).astype(np.int64)


def witness_floor() -> int:
    """Distinct-degree floor for 100-trial witnesses on G(256, 1/2), from data/witness_floor.json."""
    with open(WITNESS_FLOOR_FILE, "r", encoding="utf-8") as f:
        record = json.load(f)
    return int(record["floor"])


def verify_sqrt_bound(
    g: Graph,
    trials: int,
    seed: int,
    guard: Optional[int] = None,
    enumeration_guard: Optional[int] = None,
    subject: str = "graph",
) -> VerificationReport:
    """Check ``f(G) >= (1/250) sqrt(n/hom)`` plus the pair-mass inequalities it rests on.

    f comes from exhaustive search within the enumeration guard and from a randomized
    witness above it; hom is exact within ``guard`` and otherwise a flagged estimate.
    """
    report = VerificationReport(subject=subject, seed=seed, trials=trials)
    result = hom(g, guard=guard, allow_estimate=True, seed=seed)
    limit = settings.enumeration_guard_n if enumeration_guard is None else enumeration_guard
    if g.n <= limit:
        witness, source = f_exact(g, guard=limit), "f_exact"
    else:
        witness, source = randomized_witness(g, trials, seed), "randomized_witness"
    report.quantities.update(
        n=g.n,
        edges=edge_count(g),
        hom=result.size,
        hom_exact=result.exact,
        hom_witness=result.witness.members.vertices(),
        f_lower=witness.distinct_count,
        f_source=source,
        witness=witness.subset.vertices(),
    )
    if g.n == 0:
        report.notes.append("empty vertex set: every claim is vacuous")
        return report

    bound = sqrt_diversity_bound(g.n, result.size)
    report.quantities["bound"] = bound
    _record(report, "sqrt-bound", witness.distinct_count >= bound, witness.distinct_count, ">=", bound,
            exact=result.exact)
    if source == "randomized_witness":
        floor = witness_floor()
        report.quantities["witness_floor"] = floor
        events.info("witness_floor", subject=subject, distinct=witness.distinct_count, floor=floor, seed=seed)

    if g.n > settings.pair_guard_n:
        report.notes.append(f"pair sums skipped above {settings.pair_guard_n} vertices")
        return report
    chain = pair_mass_chain(g, result.size)
    report.quantities["reciprocal_sum"] = float(chain.reciprocal_sum)
    _record(report, "pair-mass-left", chain.left_holds, chain.n_hom, ">=", chain.reciprocal_sum,
            exact=result.exact)
    _record(report, "pair-mass-right", chain.right_holds, float(chain.reciprocal_sum), ">=",
            chain.cauchy_schwarz, tolerance=f"relative {FLOAT_GUARD}")
    masses = [(distance_mass(g, x), x) for x in range(g.n)]
    worst, vertex = max(masses)
    _record(report, "distance-mass", worst <= 2 * result.size, worst, "<=", 2 * result.size,
            exact=result.exact, note=f"heaviest vertex {vertex}")
    logger.info(f"verify_sqrt_bound: {subject} n={g.n} hom={result.size} f>={witness.distinct_count} "
                f"passed={report.passed}")
    return report


def verify_extremal_construction(k: int, m: int, guard: Optional[int] = None) -> VerificationReport:
    """``m`` disjoint cliques of size ``k-1`` have f = min(m, k-1) and hom = max(m, k-1) exactly.

    Each component contributes at most one degree value, so f reaches k-1 only once
    ``m >= k-1``. Smaller m is still checked and carries a note.
    """
    if k < 2 or m < 1:
        raise PreconditionError(f"need k >= 2 and m >= 1, got k={k}, m={m}")
    limit = settings.enumeration_guard_n if guard is None else guard
    n = (k - 1) * m
    if n > limit:
        raise CapabilityExceededError("verify_extremal_construction", n, limit, "lower k or m")
    g = disjoint_cliques(m, k - 1)
    witness = f_exact(g, guard=limit)
    result = hom(g, guard=max(limit, settings.exact_guard_n))
    report = VerificationReport(subject=f"disjoint_cliques(m={m}, k={k - 1})")
    report.quantities.update(n=n, k=k, m=m, f=witness.distinct_count, hom=result.size,
                             witness=witness.subset.vertices())
    expected_f = min(m, k - 1)
    _record(report, "extremal-f", witness.distinct_count == expected_f, witness.distinct_count, "==", expected_f)
    if m < k - 1:
        report.notes.append(f"m={m} < k-1={k - 1}: fewer cliques than degree values, so f is capped at m")
    _record(report, "extremal-hom", result.size == max(m, k - 1), result.size, "==", max(m, k - 1))
    return report


def degree_histogram_experiment(g: Graph, k: int, trials: int, seed: int,
                                subject: str = "graph") -> HistogramReport:
    """Mean number of degree-i vertices of G[U] against ``n/2^k * C(k-1, i)``.

    ``g`` must be a disjoint union of k-cliques, so every degree lies in ``0..k-1``.
    """
    if k < 1 or any(d != k - 1 for d in degrees(g)):
        raise PreconditionError(f"histogram prediction needs a disjoint union of {k}-cliques")
    if trials < 1:
        raise PreconditionError(f"trials must be at least 1, got {trials}")
    adjacency = adjacency_matrix(g).astype(np.float32)
    counts = np.zeros((trials, k), dtype=np.int64)
    sizes = np.zeros(trials, dtype=np.int64)
    for start, bits in _trial_blocks(g.n, seed, trials):
        stop = start + bits.shape[0]
        degree = _trial_degrees(adjacency, bits)
        member = bits.astype(bool)
        for d in range(k):
            counts[start:stop, d] = ((degree == d) & member).sum(axis=1)
        sizes[start:stop] = bits.sum(axis=1)

    rows: List[HistogramRow] = []
    for d in range(k):
        predicted = g.n * comb(k - 1, d) / 2 ** k
        column = counts[:, d].astype(float)
        mean = float(column.mean())
        std = float(column.std(ddof=1)) if trials > 1 else 0.0
        rows.append(HistogramRow(degree=d, predicted=predicted, observed_mean=mean, observed_std=std,
                                 z=_z(mean, predicted, std, trials)))
    passed = all(abs(row.z) <= HISTOGRAM_Z_THRESHOLD for row in rows)
    events.info("degree_histogram", subject=subject, k=k, trials=trials, seed=seed, passed=passed,
                max_abs_z=max(abs(row.z) for row in rows))
    return HistogramReport(
        subject=subject,
        clique_size=k,
        trials=trials,
        seed=seed,
        z_threshold=HISTOGRAM_Z_THRESHOLD,
        mean_subset_size=float(sizes.mean()),
        rows=rows,
        passed=passed,
    )


def _frequency_check(report: VerificationReport, claim: str, hits: int, trials: int, conclusive: bool) -> None:
    p = hits / trials
    upper = p + FREQUENCY_Z_THRESHOLD * math.sqrt(p * (1 - p) / trials)
    _record(report, claim, upper < FREQUENCY_CEILING, upper, "<", FREQUENCY_CEILING,
            tolerance=f"p + {FREQUENCY_Z_THRESHOLD}*sqrt(p(1-p)/T)", exact=conclusive,
            note=f"{hits} of {trials} trials")


def _degree_graph_edges(degree_row: np.ndarray) -> int:
    if degree_row.size == 0:
        return 0
    counts = np.bincount(degree_row)
    return int((counts * (counts - 1) // 2).sum())


def concentration_checks(
    g: Graph,
    trials: int,
    seed: int,
    hom_value: Optional[int] = None,
    guard: Optional[int] = None,
    subject: str = "graph",
) -> VerificationReport:
    """Frequencies of ``|U| < n/3`` and ``e(D) > 12 sqrt(n^3 hom)`` and the mean of e(D).

    Both frequencies must stay below 1/3 with a 3-sigma margin; the mean of e(D) must lie
    within 3 sigma of its exact expectation.
    """
    if trials < 1:
        raise PreconditionError(f"trials must be at least 1, got {trials}")
    report = VerificationReport(subject=subject, seed=seed, trials=trials)
    sufficient = trials >= MIN_STATISTICAL_TRIALS
    report.statistically_sufficient = sufficient
    if not sufficient:
        report.notes.append(f"fewer than {MIN_STATISTICAL_TRIALS} trials: statistical checks are inconclusive")
    hom_exact = True
    if hom_value is None:
        result = hom(g, guard=guard, allow_estimate=True, seed=seed)
        hom_value, hom_exact = result.size, result.exact
    markov_threshold = MARKOV_FACTOR * math.sqrt(g.n ** 3 * hom_value)

    adjacency = adjacency_matrix(g).astype(np.float32)
    sizes = np.zeros(trials, dtype=np.int64)
    edges = np.zeros(trials, dtype=np.int64)
    for start, bits in _trial_blocks(g.n, seed, trials):
        degree = _trial_degrees(adjacency, bits)
        member = bits.astype(bool)
        for row in range(bits.shape[0]):
            sizes[start + row] = int(member[row].sum())
            edges[start + row] = _degree_graph_edges(degree[row][member[row]])

    small = int((3 * sizes < g.n).sum())
    heavy = int((edges > markov_threshold).sum())
    mean_edges = float(edges.mean())
    std_edges = float(edges.std(ddof=1)) if trials > 1 else 0.0
    report.quantities.update(
        n=g.n,
        hom=hom_value,
        hom_exact=hom_exact,
        mean_subset_size=float(sizes.mean()),
        small_subset_trials=small,
        markov_threshold=markov_threshold,
        heavy_degree_graph_trials=heavy,
        mean_degree_graph_edges=mean_edges,
        std_degree_graph_edges=std_edges,
    )
    if g.n >= HOEFFDING_MIN_N:
        _frequency_check(report, "hoeffding-subset-size", small, trials, sufficient)
    else:
        report.notes.append(f"|U| < n/3 frequency recorded but not asserted below n = {HOEFFDING_MIN_N}")
    _frequency_check(report, "markov-degree-graph", heavy, trials, sufficient)

    expectation = expected_degree_graph_edges(g)
    expected = float(expectation.exact)
    report.quantities.update(
        expected_degree_graph_edges=expected,
        unconditional_degree_graph_edges=float(expectation.unconditional_sum),
        degree_graph_edge_bound=expectation.bound,
    )
    _record(report, "degree-graph-bound", expected < expectation.bound, expectation.exact, "<",
            expectation.bound, exact=expectation.all_exact)
    z = _z(mean_edges, expected, std_edges, trials)
    report.quantities["degree_graph_mean_z"] = z
    _record(report, "degree-graph-mean", abs(z) <= MEAN_Z_THRESHOLD, abs(z), "|z|<=", MEAN_Z_THRESHOLD,
            tolerance=f"{MEAN_Z_THRESHOLD} sigma", exact=sufficient and expectation.all_exact,
            note=f"mean {mean_edges!r} vs exact expectation {expected!r}")
    logger.info(f"concentration_checks: {subject} trials={trials} passed={report.passed}")
    return report


def collision_grid_checks(s_max: int, guard: Optional[int] = None) -> VerificationReport:
    """Collision probability below ``20/sqrt(delta+1)`` for all ``0 <= t <= s <= s_max``.

    Non-adjacent pairs use ``delta = s+t``; adjacent pairs, whose private neighbourhoods
    contain each other, use ``delta = s+t-2``. Each probability is also checked against
    the Vandermonde closed form when it is computed.
    """
    report = VerificationReport(subject=f"collision grid s <= {s_max}")
    checked = 0
    failures: List[str] = []
    tightest = (Fraction(0), "")
    for s in range(s_max + 1):
        for t in range(s + 1):
            prob = collision_prob_exact(s, t, guard)
            conventions = [("non-edge", s + t)]
            if s >= 1 and t >= 1:
                conventions.append(("edge", s + t - 2))
            for name, delta in conventions:
                checked += 1
                # prob^2 (delta+1) / 400 < 1 is the exact form of the bound
                ratio = prob.value * prob.value * (delta + 1) / 400
                if ratio > tightest[0]:
                    tightest = (ratio, f"s={s} t={t} {name}")
                if not collision_bound_holds(prob, delta):
                    failures.append(f"s={s} t={t} {name}")
    report.quantities.update(s_max=s_max, cases=checked, tightest_case=tightest[1],
                             tightest_ratio=float(tightest[0]))
    _record(report, "collision-bound", not failures, len(failures), "==", 0,
            note=failures[0] if failures else f"tightest {tightest[1]}")
    return report


def central_binomial_checks(s_max: int) -> VerificationReport:
    """``2^-s C(s, floor(s/2)) < 10/sqrt(s+1)`` for every ``0 <= s <= s_max``, by exact squaring."""
    report = VerificationReport(subject=f"central binomial s <= {s_max}")
    failures = central_binomial_failures(s_max)
    report.quantities.update(s_max=s_max, cases=s_max + 1, value_at_max=float(central_binomial(s_max)))
    _record(report, "central-binomial", not failures, len(failures), "==", 0,
            note=f"first failure s={failures[0]}" if failures else "")
    return report


def constants_checks(ks: Sequence[int], epss: Sequence[float]) -> VerificationReport:
    """Both printed forms of J agree, and the final counting margin under each form of eta."""
    report = VerificationReport(subject="proof constants")
    margins: Dict[str, Dict[str, float]] = {}
    for k in ks:
        for eps in epss:
            label = f"k={k} eps={eps}"
            try:
                constants = proof_constants(k, eps)
            except DDTError as exc:
                _record(report, "j-identity", False, label, "==", "consistent", note=str(exc))
                continue
            relative = abs(constants.J - constants.J_alt) / constants.J
            _record(report, "j-identity", relative <= 1e-12, relative, "<=", 1e-12, note=label)
            margin = distinct_degree_margin(constants)
            variant = distinct_degree_margin(constants, constants.eta_variant)
            margins[label] = {"eta": margin, "eta_variant": variant}
            _record(report, "counting-margin", margin > 0, margin, ">", 0, note=label)
    report.quantities["margins"] = margins
    open_cases = sorted(label for label, pair in margins.items() if pair["eta_variant"] <= 0)
    if open_cases:
        report.notes.append("with eta = eps*beta/(1e5 k) the counting step does not close for: "
                            + ", ".join(open_cases))
    return report


def _oriented_degrees(adjacency: np.ndarray, bits: np.ndarray, mask: np.ndarray, complement: bool) -> np.ndarray:
    selected = (bits * mask).astype(np.int64)
    degree = _trial_degrees(adjacency, selected)
    if not complement:
        return degree
    # complement degree inside the set: members of the set other than the vertex itself, minus neighbours
    return selected.sum(axis=1, keepdims=True) - selected - degree


def cluster_event_experiment(
    g: Graph,
    params: ClusterParams,
    k: int,
    eps: float,
    eta: float,
    trials: int,
    seed: int,
    subject: str = "graph",
) -> VerificationReport:
    """Desk-scale view of the cluster events behind the large-hom argument.

    Partitions ``g``, computes r and an independent core per cluster, then over 1/2-random
    U records how often every core shows r+1 distinct inside degrees among vertices with a
    common outside degree, the number b of degree-graph edges between clusters, and how
    often G[U] has k distinct degrees. Only the mean of b is asserted.
    """
    if trials < 1:
        raise PreconditionError(f"trials must be at least 1, got {trials}")
    report = VerificationReport(subject=subject, seed=seed, trials=trials)
    sufficient = trials >= MIN_STATISTICAL_TRIALS
    report.statistically_sufficient = sufficient
    result = partition(g, params)

    cores: List[Tuple[VertexSet, int, bool, VertexSet]] = []
    summary: List[Dict[str, Any]] = []
    for cluster in result.clusters:
        entry: Dict[str, Any] = {"size": len(cluster)}
        try:
            r = compute_r(len(cluster), g.n, k, eps, eta)
        except UndefinedRError as exc:
            entry["note"] = str(exc)
            summary.append(entry)
            continue
        entry["r"] = r
        if r > k - 2:
            entry["note"] = "r exceeds k-2"
            summary.append(entry)
            continue
        core = independent_core(g, cluster, k, r)
        entry.update(orientation=core.orientation, core=core.core.vertices(),
                     core_guarantee=float(core_size_guarantee(len(core.core), k)))
        summary.append(entry)
        if len(core.core):
            cores.append((cluster, r, core.orientation == "complement", core.core))
    report.quantities.update(
        n=g.n, k=k, eps=eps, eta=eta,
        clusters=summary,
        leftover=result.leftover.vertices(),
        max_intra=result.max_intra,
        min_inter=result.min_inter,
    )

    labels = np.full(g.n, -1, dtype=np.int64)
    for index, cluster in enumerate(result.clusters):
        labels[cluster.vertices()] = index
    expected_b = Fraction(0)
    clustered = [v for v in range(g.n) if labels[v] >= 0]
    for i, x in enumerate(clustered):
        for y in clustered[i + 1:]:
            if labels[x] != labels[y]:
                expected_b += in_subset_collision_prob(g, x, y).value / 4

    adjacency = adjacency_matrix(g).astype(np.float32)
    event_hits = 0
    diverse_hits = 0
    b_values = np.zeros(trials, dtype=np.int64)
    for start, bits in _trial_blocks(g.n, seed, trials):
        degree = _trial_degrees(adjacency, bits)
        member = bits.astype(bool)
        inside_outside = []
        for cluster, r, flipped, core in cores:
            mask = np.zeros(g.n, dtype=np.uint8)
            mask[cluster.vertices()] = 1
            inside = _oriented_degrees(adjacency, bits, mask, flipped)
            outside = _oriented_degrees(adjacency, bits, 1 - mask, flipped)
            inside_outside.append((r, core.vertices(), inside, outside))
        for row in range(bits.shape[0]):
            in_u = member[row]
            values = degree[row][in_u]
            if len(set(values.tolist())) >= k:
                diverse_hits += 1
            per_degree: Dict[int, Counter] = defaultdict(Counter)
            for v in np.flatnonzero(in_u & (labels >= 0)).tolist():
                per_degree[int(degree[row, v])][int(labels[v])] += 1
            b = 0
            for counter in per_degree.values():
                total = sum(counter.values())
                b += (total * total - sum(c * c for c in counter.values())) // 2
            b_values[start + row] = b
            if cores and all(
                _core_event(r, core_vertices, inside[row], outside[row], in_u)
                for r, core_vertices, inside, outside in inside_outside
            ):
                event_hits += 1

    mean_b = float(b_values.mean())
    std_b = float(b_values.std(ddof=1)) if trials > 1 else 0.0
    z = _z(mean_b, float(expected_b), std_b, trials)
    report.quantities.update(
        cluster_event_frequency=event_hits / trials if cores else None,
        k_distinct_frequency=diverse_hits / trials,
        mean_inter_cluster_edges=mean_b,
        expected_inter_cluster_edges=float(expected_b),
    )
    _record(report, "inter-cluster-degree-edges", abs(z) <= MEAN_Z_THRESHOLD, abs(z), "|z|<=",
            MEAN_Z_THRESHOLD, tolerance=f"{MEAN_Z_THRESHOLD} sigma", exact=sufficient,
            note=f"mean {mean_b!r} vs exact expectation {float(expected_b)!r}")
    return report


def _core_event(r: int, core: List[int], inside: np.ndarray, outside: np.ndarray, in_u: np.ndarray) -> bool:
    groups: Dict[int, set] = defaultdict(set)
    for v in core:
        if in_u[v]:
            groups[int(outside[v])].add(int(inside[v]))
    return any(len(values) >= r + 1 for values in groups.values())


def ratio_experiment(
    graphs: Sequence[Tuple[str, Graph]],
    trials: int,
    seed: int,
    guard: Optional[int] = None,
) -> RatioReport:
    """Tabulate f*hom/n against sqrt(n/hom); exploratory, nothing is asserted."""
    rows: List[RatioRow] = []
    for subject, g in graphs:
        if g.n == 0:
            continue
        result = hom(g, guard=guard, allow_estimate=True, seed=seed)
        if g.n <= settings.enumeration_guard_n:
            f_lower, f_is_exact = f_exact(g).distinct_count, True
        else:
            f_lower, f_is_exact = randomized_witness(g, trials, seed).distinct_count, False
        rows.append(RatioRow(
            subject=subject,
            n=g.n,
            hom=result.size,
            hom_exact=result.exact,
            f_lower=f_lower,
            f_exact=f_is_exact,
            ratio=f_lower * result.size / g.n,
            sqrt_ratio=math.sqrt(g.n / result.size),
        ))
    return RatioReport(seed=seed, trials=trials, rows=rows)

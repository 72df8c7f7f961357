import math
from math import comb

import pytest

from ddt.errors import CapabilityExceededError, PreconditionError
from ddt.models.clustering import ClusterParams
from ddt.models.graph import Graph
from ddt.services.constructions import disjoint_cliques, random_graph
from ddt.services.harness import (
    central_binomial_checks,
    cluster_event_experiment,
    collision_grid_checks,
    concentration_checks,
    constants_checks,
    degree_histogram_experiment,
    ratio_experiment,
    verify_extremal_construction,
    verify_sqrt_bound,
    witness_floor,
)


def _claims(report):
    return {check.claim: check for check in report.checks}


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_extremal_construction_grid(k):
    for m in range(1, 16 // (k - 1) + 1):
        report = verify_extremal_construction(k, m)
        assert report.passed, report.checks
        assert report.quantities["f"] == min(m, k - 1)
        assert report.quantities["hom"] == max(m, k - 1)


def test_extremal_construction_with_fewer_cliques_than_degrees():
    report = verify_extremal_construction(3, 1)
    assert report.passed
    assert (report.quantities["f"], report.quantities["hom"]) == (1, 2)
    assert any("capped at m" in note for note in report.notes)
    assert not verify_extremal_construction(3, 2).notes


def test_extremal_construction_examples():
    report = verify_extremal_construction(2, 5)
    assert (report.quantities["f"], report.quantities["hom"]) == (1, 5)
    report = verify_extremal_construction(4, 4)
    assert report.passed
    assert (report.quantities["f"], report.quantities["hom"]) == (3, 4)
    assert set(_claims(report)) == {"extremal-f", "extremal-hom"}


def test_extremal_construction_respects_guard():
    with pytest.raises(CapabilityExceededError):
        verify_extremal_construction(5, 10, guard=24)
    with pytest.raises(PreconditionError):
        verify_extremal_construction(1, 3)


def test_sqrt_bound_on_disjoint_cliques():
    report = verify_sqrt_bound(disjoint_cliques(4, 3), trials=10, seed=1)
    assert report.passed
    assert report.quantities["f_lower"] == 3
    assert report.quantities["f_source"] == "f_exact"
    assert report.quantities["bound"] == pytest.approx(math.sqrt(3) / 250)
    assert set(_claims(report)) == {"sqrt-bound", "pair-mass-left", "pair-mass-right", "distance-mass"}


def test_sqrt_bound_on_empty_vertex_set():
    report = verify_sqrt_bound(Graph.empty(0), trials=1, seed=0)
    assert report.passed
    assert report.checks == []
    assert report.notes


def test_sqrt_bound_uses_randomized_witness_above_enumeration_guard():
    g = random_graph(40, 0.5, seed=5)
    report = verify_sqrt_bound(g, trials=20, seed=2, enumeration_guard=10)
    assert report.quantities["f_source"] == "randomized_witness"
    assert report.quantities["witness_floor"] == witness_floor()
    assert report.passed
    again = verify_sqrt_bound(g, trials=20, seed=2, enumeration_guard=10)
    assert again.model_dump() == report.model_dump()


def test_witness_floor_is_recorded():
    assert witness_floor() >= 1


def test_degree_histogram_on_triangles():
    report = degree_histogram_experiment(disjoint_cliques(100, 3), 3, trials=2000, seed=7)
    assert [row.predicted for row in report.rows] == [37.5, 75.0, 37.5]
    assert report.passed
    assert report.z_threshold == 5
    assert report.mean_subset_size == pytest.approx(150, abs=3)


def test_degree_histogram_on_empty_graph():
    report = degree_histogram_experiment(Graph.empty(20), 1, trials=200, seed=3)
    assert len(report.rows) == 1
    assert report.rows[0].predicted == 10.0


def test_degree_histogram_preconditions(p3):
    with pytest.raises(PreconditionError):
        degree_histogram_experiment(p3, 3, trials=10, seed=1)
    with pytest.raises(PreconditionError):
        degree_histogram_experiment(disjoint_cliques(2, 3), 3, trials=0, seed=1)


def test_concentration_on_disjoint_cliques():
    report = concentration_checks(disjoint_cliques(64, 4), trials=400, seed=11, hom_value=64)
    claims = _claims(report)
    assert set(claims) == {"hoeffding-subset-size", "markov-degree-graph", "degree-graph-bound", "degree-graph-mean"}
    assert report.statistically_sufficient
    assert claims["hoeffding-subset-size"].passed
    assert claims["markov-degree-graph"].passed
    assert claims["degree-graph-bound"].passed
    assert report.quantities["heavy_degree_graph_trials"] == 0


def test_concentration_with_one_trial_is_inconclusive(c5):
    report = concentration_checks(c5, trials=1, seed=4)
    assert not report.statistically_sufficient
    assert report.passed
    assert "hoeffding-subset-size" not in _claims(report)
    assert not _claims(report)["degree-graph-mean"].exact


def test_concentration_is_reproducible(petersen):
    first = concentration_checks(petersen, trials=50, seed=8)
    second = concentration_checks(petersen, trials=50, seed=8)
    assert first.model_dump() == second.model_dump()


def test_collision_and_central_binomial_campaigns():
    grid = collision_grid_checks(20)
    assert grid.passed
    assert grid.quantities["cases"] == 231 + 210
    assert central_binomial_checks(200).passed


def test_constants_campaign_reports_open_counting_cases():
    report = constants_checks([2, 20], [0.1])
    assert report.passed
    assert any("k=20 eps=0.1" in note for note in report.notes)
    assert report.quantities["margins"]["k=2 eps=0.1"]["eta"] > 0


def test_cluster_event_experiment_is_reproducible():
    g = disjoint_cliques(3, 4)
    params = ClusterParams(seed_radius=1, link_dist=3, growth_ratio=0.1, seed_frac=0.01, min_cluster_frac=0.001)
    first = cluster_event_experiment(g, params, k=5, eps=0.1, eta=0.0, trials=100, seed=3)
    second = cluster_event_experiment(g, params, k=5, eps=0.1, eta=0.0, trials=100, seed=3)
    assert first.model_dump() == second.model_dump()
    assert [entry["r"] for entry in first.quantities["clusters"]] == [1, 1, 1]
    assert first.quantities["expected_inter_cluster_edges"] > 0
    assert [check.claim for check in first.checks] == ["inter-cluster-degree-edges"]


def test_ratio_experiment(k4):
    report = ratio_experiment([("k4", k4), ("empty", Graph.empty(0))], trials=5, seed=1)
    assert len(report.rows) == 1
    row = report.rows[0]
    assert (row.hom, row.f_lower, row.ratio, row.sqrt_ratio) == (4, 1, 1.0, 1.0)


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(20))
def test_sqrt_bound_on_random_graph_at_scale(seed):
    g = random_graph(256, 0.5, seed=seed)
    report = verify_sqrt_bound(g, trials=100, seed=seed, guard=256)
    assert report.passed
    assert report.quantities["hom_exact"]
    assert report.quantities["hom"] <= 24
    assert report.quantities["f_lower"] > math.ceil(report.quantities["bound"])
    assert report.quantities["f_lower"] >= witness_floor()


@pytest.mark.slow
def test_concentration_on_random_graph_at_scale():
    report = concentration_checks(random_graph(256, 0.5, seed=3), trials=10_000, seed=5)
    assert _claims(report)["hoeffding-subset-size"].passed
    assert _claims(report)["markov-degree-graph"].passed
    assert _claims(report)["degree-graph-mean"].passed
    assert report.statistically_sufficient


@pytest.mark.slow
def test_concentration_on_disjoint_cliques_at_scale():
    report = concentration_checks(disjoint_cliques(64, 4), trials=10_000, seed=11, hom_value=64)
    claims = _claims(report)
    assert claims["hoeffding-subset-size"].passed
    assert claims["markov-degree-graph"].passed
    assert claims["degree-graph-mean"].passed
    assert claims["degree-graph-mean"].exact


@pytest.mark.slow
def test_degree_histogram_on_five_cliques_at_scale():
    report = degree_histogram_experiment(disjoint_cliques(200, 5), 5, trials=10_000, seed=5)
    assert [row.predicted for row in report.rows] == [1000 / 32 * comb(4, i) for i in range(5)]
    assert report.passed
    assert all(abs(row.z) <= 5 for row in report.rows)

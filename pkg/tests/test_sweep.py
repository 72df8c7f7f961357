import pytest

from ddt.errors import PreconditionError
from ddt.services.constructions import disjoint_cliques
from ddt.services.sweep import CLAIMS, SweepSummary, check_graph, exhaustive_small_sweep, graph_from_code, sweep_chunk


def test_graph_from_code_orders_pairs_lexicographically():
    g = graph_from_code(3, 0b101)
    assert g.edges() == [(0, 1), (1, 2)]
    assert graph_from_code(4, (1 << 6) - 1) == disjoint_cliques(1, 4)


def test_check_graph_has_no_negative_slack(c5):
    slacks, f, h = check_graph(c5)
    assert set(slacks) == set(CLAIMS)
    assert min(slacks.values()) >= 0
    assert (f, h) == (2, 2)


@pytest.mark.parametrize("n_max", [0, 1, 2, 3, 4])
def test_small_sweeps_pass(n_max):
    report = exhaustive_small_sweep(n_max, threads=1)
    assert report.passed
    assert len(report.checks) == len(CLAIMS)


def test_sweep_counts_every_labelled_graph():
    report = exhaustive_small_sweep(4, threads=1)
    assert report.quantities["graphs"] == {"0": 1, "1": 1, "2": 2, "3": 8, "4": 64}
    assert report.quantities["min_f_by_hom"]["4"]["4"] == 1


def test_chunk_summaries_merge_in_any_order():
    whole = sweep_chunk(4, 0, 64)
    left, right = sweep_chunk(4, 0, 20), sweep_chunk(4, 20, 64)
    merged = SweepSummary().merge(right).merge(left)
    assert merged.graphs == whole.graphs
    assert merged.min_f_by_hom == whole.min_f_by_hom
    for claim in CLAIMS:
        assert merged.claims[claim].checked == whole.claims[claim].checked
        assert merged.claims[claim].tightest == whole.claims[claim].tightest


def test_sweep_rejects_large_n():
    with pytest.raises(PreconditionError):
        exhaustive_small_sweep(7)


@pytest.mark.slow
def test_full_sweep_in_parallel():
    report = exhaustive_small_sweep(6, threads=4)
    assert report.passed
    assert report.quantities["graphs"]["6"] == 32768

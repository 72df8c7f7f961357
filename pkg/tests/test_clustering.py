import pytest
from fractions import Fraction
from pydantic import ValidationError

from ddt.constants import CONSTANT_GRID_EPSS, CONSTANT_GRID_KS
from ddt.errors import PreconditionError, UndefinedRError
from ddt.models.clustering import ClusterParams, ClusterResult
from ddt.models.families import FamilySpec
from ddt.models.graph import Graph, VertexSet
from ddt.services.clustering import (
    bounded_degree_side,
    compute_r,
    core_size_guarantee,
    distinct_degree_margin,
    high_degree_count,
    independent_core,
    max_dependents,
    partition,
    proof_constants,
    s_independent,
    validate_partition,
)
from ddt.services.constructions import complement_blowup, disjoint_cliques, planted_parts
from ddt.services.graph_core import max_pair_distance


def _params(d0: float, link: float) -> ClusterParams:
    return ClusterParams(
        seed_radius=d0, link_dist=link, growth_ratio=0.1, seed_frac=0.01, min_cluster_frac=0.001
    )


def test_proof_constants_small_case():
    constants = proof_constants(2, 0.1)
    assert constants.beta == pytest.approx(0.005)
    assert constants.eta == pytest.approx(1.25e-9)
    assert constants.Delta == pytest.approx(4 * constants.K)
    assert constants.L == pytest.approx((constants.Delta ** 2 + 1) * 2)


@pytest.mark.parametrize("k", CONSTANT_GRID_KS)
@pytest.mark.parametrize("eps", CONSTANT_GRID_EPSS)
def test_proof_constants_j_forms_agree(k, eps):
    constants = proof_constants(k, eps)
    assert constants.J == pytest.approx(constants.J_alt, rel=1e-12)
    assert constants.eta_variant == pytest.approx(constants.eta * k)


def test_constant_grid_covers_the_checked_range():
    assert CONSTANT_GRID_KS == tuple(range(2, 9))
    assert CONSTANT_GRID_EPSS == (0.05, 0.1, 0.25, 0.49)


def test_proof_constants_reject_bad_input():
    with pytest.raises(PreconditionError):
        proof_constants(1, 0.1)
    with pytest.raises(PreconditionError):
        proof_constants(3, 0.5)


def test_distinct_degree_margin_depends_on_eta_form():
    constants = proof_constants(20, 0.1)
    assert distinct_degree_margin(constants) > 0
    assert distinct_degree_margin(constants, constants.eta_variant) < 0


def test_dependency_helpers():
    assert max_dependents(3) == 9
    assert core_size_guarantee(10, 2) == Fraction(5, 2)


def test_cluster_params_validation():
    with pytest.raises(ValidationError):
        _params(3, 3)
    with pytest.raises(ValidationError):
        ClusterParams(seed_radius=1, link_dist=3, growth_ratio=1.5, seed_frac=0.01, min_cluster_frac=0.001)
    derived = ClusterParams.from_constants(proof_constants(2, 0.1))
    assert derived.seed_radius == pytest.approx(4e6)
    assert derived.growth_ratio == pytest.approx(0.0025)


def test_partition_recovers_disjoint_cliques():
    g = disjoint_cliques(3, 4)
    result = partition(g, _params(1, 3))
    assert list(result.clusters) == planted_parts(FamilySpec(family="disjoint_cliques", m=3, k=4))
    assert len(result.leftover) == 0
    assert result.max_intra == 0
    assert result.min_inter == 6


def test_partition_recovers_blowup_copies():
    g = complement_blowup(4, 2, 16)
    result = partition(g, _params(3, 5))
    assert list(result.clusters) == planted_parts(FamilySpec(family="complement_blowup", k=4, b=2, n=16))
    assert result.max_intra == 2
    assert result.min_inter == 12
    assert validate_partition(g, result, K=3, J=5, min_size=8, max_leftover=0).passed


def test_partition_of_complete_graph_is_one_cluster():
    g = disjoint_cliques(1, 6)
    result = partition(g, _params(1, 3))
    assert result.clusters == (VertexSet.full(6),)
    assert result.min_inter is None


def test_partition_of_edgeless_vertices_goes_to_leftover():
    result = partition(Graph.empty(1), _params(1, 3))
    assert result.clusters == ()
    assert result.leftover == VertexSet.full(1)


def test_validate_partition_passes_on_planted_output():
    g = disjoint_cliques(3, 4)
    report = validate_partition(g, partition(g, _params(1, 3)), K=1, J=3, min_size=4, max_leftover=0)
    assert report.passed
    assert [p.name for p in report.properties] == [
        "disjoint-cover", "covered", "cluster-size", "intra-distance", "inter-distance"
    ]


def test_validate_partition_flags_merged_clusters():
    g = disjoint_cliques(3, 4)
    merged = ClusterResult(
        clusters=(VertexSet(12, 0xFF), VertexSet(12, 0xF00)),
        leftover=VertexSet.empty(12),
        max_intra=6,
        min_inter=6,
    )
    report = validate_partition(g, merged, K=1, J=3, min_size=4, max_leftover=0)
    intra = next(p for p in report.properties if p.name == "intra-distance")
    assert not report.passed
    assert not intra.passed
    assert intra.witness == [0, 4]


def test_validate_partition_flags_uncovered_leftover():
    g = disjoint_cliques(2, 3)
    everything_left = ClusterResult(clusters=(), leftover=VertexSet.full(6), max_intra=0, min_inter=None)
    report = validate_partition(g, everything_left, K=1, J=3, min_size=1, max_leftover=5)
    by_name = {p.name: p for p in report.properties}
    assert by_name["disjoint-cover"].passed
    assert not by_name["covered"].passed


def test_validate_partition_flags_overlap_and_small_clusters():
    g = disjoint_cliques(2, 2)
    overlapping = ClusterResult(
        clusters=(VertexSet(4, 0b0011), VertexSet(4, 0b0110)),
        leftover=VertexSet(4, 0b1000),
        max_intra=0,
        min_inter=None,
    )
    by_name = {p.name: p for p in validate_partition(g, overlapping, 5, 0, 3, 4).properties}
    assert not by_name["disjoint-cover"].passed
    assert by_name["disjoint-cover"].witness == [1]
    assert not by_name["cluster-size"].passed


def test_s_independent(p3):
    g = disjoint_cliques(2, 2)
    everything = VertexSet.full(4)
    assert s_independent(g, everything, 0, 2)
    assert not s_independent(g, everything, 0, 1)
    assert not s_independent(p3, VertexSet.full(3), 0, 2)
    assert s_independent(p3, VertexSet.from_vertices(3, [0, 2]), 0, 2)
    assert not s_independent(g, everything, 0, 2, in_complement=True)
    with pytest.raises(PreconditionError):
        s_independent(p3, VertexSet.from_vertices(3, [0, 1]), 0, 2)


def test_compute_r():
    assert compute_r(1, 100, 3, 0.5, 0.0) == 0
    assert compute_r(50, 100, 3, 0.5, 0.0) == 1
    assert compute_r(100, 100, 3, 0.5, 0.0) == 2
    assert compute_r(100, 100, 5, 0.25, 0.0) == 4
    with pytest.raises(UndefinedRError):
        compute_r(10, 100, 3, 0.5, 0.2)


def test_independent_core_on_triangle():
    g = disjoint_cliques(2, 3)
    core = independent_core(g, VertexSet.from_vertices(6, [0, 1, 2]), k=3, r=0)
    assert core.orientation == "complement"
    assert core.core.vertices() == [0, 1, 2]


def test_independent_core_on_independent_set():
    core = independent_core(Graph.empty(4), VertexSet.full(4), k=2, r=0)
    assert core.orientation == "graph"
    assert core.core == VertexSet.full(4)


def test_independent_core_members_are_independent(petersen):
    everything = VertexSet.full(10)
    core = independent_core(petersen, everything, k=5, r=0)
    members = core.core.vertices()
    assert core.orientation == "graph"
    for i, x in enumerate(members):
        for y in members[i + 1:]:
            assert s_independent(petersen, everything, x, y)


def test_independent_core_rejects_large_r(p3):
    with pytest.raises(PreconditionError):
        independent_core(p3, VertexSet.full(3), k=3, r=2)


def test_bounded_degree_side(c5, k4):
    assert bounded_degree_side(k4, 0) == "complement"
    assert bounded_degree_side(Graph.empty(5), 0) == "graph"
    assert bounded_degree_side(c5, max_pair_distance(c5)) == "graph"
    assert bounded_degree_side(disjoint_cliques(2, 3), 0) == "neither"


def test_high_degree_count(star):
    assert high_degree_count(Graph.empty(5), 2) == 0
    assert high_degree_count(star, 2) == 4
    assert high_degree_count(Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)]), 3) == 2

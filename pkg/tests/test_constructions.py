import networkx as nx
import pytest
from pydantic import ValidationError

from ddt.errors import InvalidSpecError
from ddt.models.families import FamilySpec
from ddt.models.graph import Graph
from ddt.services.constructions import (
    build_family,
    complement_blowup,
    disjoint_cliques,
    planted_parts,
    random_graph,
)
from ddt.services.degree_diversity import f_exact
from ddt.services.graph_core import complement, distance_table, edge_count
from ddt.services.homogeneous import hom


def test_disjoint_cliques_shapes():
    assert disjoint_cliques(1, 4) == Graph.from_edges(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
    assert disjoint_cliques(5, 1) == Graph.empty(5)
    g = disjoint_cliques(3, 4)
    assert edge_count(g) == 18
    assert g.has_edge(4, 7) and not g.has_edge(3, 4)
    with pytest.raises(InvalidSpecError):
        disjoint_cliques(0, 3)


def test_complement_blowup_rejects_bad_divisibility():
    for k, b, n in [(4, 3, 16), (4, 2, 10), (2, 4, 8)]:
        with pytest.raises(InvalidSpecError):
            complement_blowup(k, b, n)
    with pytest.raises(ValidationError):
        FamilySpec(family="complement_blowup", k=4, b=3, n=16)


def test_complement_blowup_extremes_are_isomorphic_to_cliques():
    # b = k: a single copy, the complement of n/k disjoint K_k
    full = complement_blowup(3, 3, 12)
    assert nx.is_isomorphic(full.to_networkx(), complement(disjoint_cliques(4, 3)).to_networkx())
    # b = 1: k components, each a clique on n/k vertices
    split = complement_blowup(4, 1, 8)
    assert nx.is_isomorphic(split.to_networkx(), disjoint_cliques(4, 2).to_networkx())


def _valid_blowups(limit: int):
    for n in range(1, limit + 1):
        for k in range(1, n + 1):
            if n % k:
                continue
            for b in range(1, k + 1):
                if k % b == 0:
                    yield k, b, n


@pytest.mark.parametrize("k,b,n", list(_valid_blowups(20)))
def test_complement_blowup_distance_table(k, b, n):
    g = complement_blowup(k, b, n)
    table = distance_table(g)
    copy_size = n * b // k
    for x in range(n):
        for y in range(x + 1, n):
            same_copy = x // copy_size == y // copy_size
            same_inner = same_copy and (x % copy_size) // b == (y % copy_size) // b
            if same_inner:
                assert table[x][y] == 0
            elif same_copy:
                assert table[x][y] == 2 * (b - 1)
            else:
                assert table[x][y] == 2 * b * (n // k - 1)


def test_random_graph_extremes_and_reproducibility():
    assert random_graph(6, 0.0, seed=1) == Graph.empty(6)
    assert random_graph(6, 1.0, seed=1) == disjoint_cliques(1, 6)
    assert random_graph(30, 0.5, seed=9) == random_graph(30, 0.5, seed=9)
    assert random_graph(30, 0.5, seed=9) != random_graph(30, 0.5, seed=10)
    assert random_graph(1, 0.5, seed=0) == Graph.empty(1)
    with pytest.raises(InvalidSpecError):
        random_graph(4, 1.5, seed=0)


def test_random_graph_edge_count_near_mean():
    n = 200
    pairs = n * (n - 1) // 2
    edges = edge_count(random_graph(n, 0.5, seed=2024))
    # five standard deviations of Binomial(pairs, 1/2)
    assert abs(edges - pairs / 2) < 5 * (pairs / 4) ** 0.5


def test_build_family_and_planted_parts():
    spec = FamilySpec(family="disjoint_cliques", m=2, k=3)
    assert build_family(spec) == disjoint_cliques(2, 3)
    assert [part.vertices() for part in planted_parts(spec)] == [[0, 1, 2], [3, 4, 5]]

    blowup = FamilySpec(family="complement_blowup", k=4, b=2, n=16)
    assert build_family(blowup) == complement_blowup(4, 2, 16)
    assert len(planted_parts(blowup)) == 2

    random_spec = FamilySpec(family="random", n=10, p=0.3, seed=4)
    assert build_family(random_spec) == random_graph(10, 0.3, 4)
    with pytest.raises(InvalidSpecError):
        planted_parts(random_spec)
    with pytest.raises(ValidationError):
        FamilySpec(family="random", n=10, p=0.3)


def _cliques_with_enough_copies(limit: int):
    for k in range(1, limit + 1):
        for m in range(k, limit // k + 1):
            yield m, k


@pytest.mark.parametrize("m,k", list(_cliques_with_enough_copies(16)))
def test_disjoint_cliques_diversity_and_hom(m, k):
    g = disjoint_cliques(m, k)
    assert f_exact(g).distinct_count == k
    assert hom(g).size == m


def test_disjoint_cliques_with_few_copies_cap_diversity():
    # one degree value per clique
    g = disjoint_cliques(2, 8)
    assert f_exact(g).distinct_count == 2
    assert hom(g).size == 8
    assert f_exact(disjoint_cliques(3, 4)).distinct_count == 3


def test_complement_blowup_diversity_and_hom():
    g = complement_blowup(4, 2, 16)
    assert f_exact(g).distinct_count == 4
    assert hom(g).size == 16 // 4

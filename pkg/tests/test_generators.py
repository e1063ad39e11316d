from __future__ import annotations

import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from graphpow.generators import (
    DisconnectedCirculantWarning,
    Family,
    FamilySpec,
    GenerationError,
    circulant,
    clique_ring,
    complete,
    cycle,
    enumerate_connected,
    enumerate_trees,
    h_family,
    h_family_clusters,
    h_family_order,
    h_prime,
    h_prime_partition,
    path,
    prufer_decode,
    prufer_encode,
    random_regular,
    random_tree,
    symmetric_subsets,
)
from graphpow.graph import GraphError, diameter, is_connected, power, regularity
from graphpow.treepower import is_tree
from conftest import to_nx


def rotate(g, shift):
    n = g.n
    return sorted(tuple(sorted(((u + shift) % n, (v + shift) % n))) for u, v in g.edges())


def test_small_paths_and_cycles():
    assert path(2).edges() == [(0, 1)]
    assert cycle(3) == complete(3)
    assert regularity(cycle(3)) == 2


def test_h_family_small():
    g = h_family(3, 2)
    assert (g.n, g.num_edges, regularity(g), diameter(g)) == (14, 21, 3, 8)


@pytest.mark.parametrize("d", [3, 5, 7])
@pytest.mark.parametrize("t", [1, 2, 3, 4, 5])
def test_h_family_shape(d, t):
    g = h_family(d, t)
    assert g.n == h_family_order(d, t)
    assert regularity(g) == d
    assert diameter(g) == 3 * t + 2
    clusters = h_family_clusters(d, t)
    assert sorted(v for c in clusters for v in c) == list(range(g.n))


@pytest.mark.parametrize("d,t", [(2, 2), (4, 1), (3, 0)])
def test_h_family_rejects(d, t):
    with pytest.raises(GraphError):
        h_family(d, t)


def test_h_prime_small():
    g = h_prime(3, 2, 5)
    assert g.num_edges == 50
    parts = h_prime_partition(3, 2)
    assert [len(p) for p in parts] == [4, 4, 4]
    for i in range(3):
        assert g.induced_edges(range(4 * i, 4 * i + 4)) == 3 * 4 // 2
    joined = {(i, j) for i in range(3) for j in range(i + 1, 3)
              if all(g.has_edge(4 * i + a, 4 * j + b) for a in range(4) for b in range(4))}
    assert joined == {(0, 1), (1, 2)}


@pytest.mark.parametrize("k", [3, 4, 6])
def test_h_prime_rejects_bad_k(k):
    with pytest.raises(GraphError):
        h_prime(3, 2, k)


def test_clique_ring():
    g = clique_ring(5, 10)
    assert (g.n, regularity(g)) == (20, 5)
    assert set(power(g, 3).degrees()) == {13}
    assert clique_ring(2, 9) == cycle(9)
    with pytest.raises(GraphError):
        clique_ring(4, 10)
    with pytest.raises(GraphError):
        clique_ring(5, 3)


def test_circulant():
    assert circulant(6, {1, 5}) == cycle(6)
    assert regularity(circulant(7, {1, 2, 5, 6})) == 4
    with pytest.raises(GraphError):
        circulant(7, {1})
    with pytest.raises(GraphError):
        circulant(7, {0, 1, 6})
    with pytest.warns(DisconnectedCirculantWarning):
        g = circulant(8, {2, 6})
    assert not is_connected(g)


@pytest.mark.parametrize("n,k", [(9, 2), (13, 4), (20, 3)])
def test_circulant_power(n, k):
    s = {x % n for j in range(1, k + 1) for x in (j, -j)}
    assert power(circulant(n, {1, n - 1}), k) == circulant(n, s)


@pytest.mark.parametrize("g", [clique_ring(5, 7), clique_ring(8, 5), circulant(11, {1, 3, 8, 10})])
def test_rotation_automorphism(g):
    if g.n == 14:
        shift = 2
    elif g.n == 15:
        shift = 3
    else:
        shift = 1
    assert rotate(g, shift) == g.edges()


def test_symmetric_subsets_count():
    assert sum(1 for _ in symmetric_subsets(10)) == 2 ** 5
    assert all(all((-x) % 10 in s for x in s) for s in symmetric_subsets(10))


@pytest.mark.parametrize("seed", range(8))
def test_random_regular(seed):
    g = random_regular(20, 3, seed)
    assert regularity(g) == 3 and is_connected(g)
    assert g == random_regular(20, 3, seed)


def test_random_regular_dense_and_errors():
    g = random_regular(200, 10, 5)
    assert regularity(g) == 10
    with pytest.raises(GraphError):
        random_regular(5, 3, 0)
    with pytest.raises(GraphError):
        random_regular(4, 4, 0)
    with pytest.raises(GenerationError):
        random_regular(6, 1, 0, max_attempts=3)


@pytest.mark.parametrize("seed", range(5))
def test_random_tree(seed):
    t = random_tree(30, seed)
    assert t.num_edges == 29 and is_connected(t)
    assert t == random_tree(30, seed)


def test_enumeration_counts():
    assert sum(1 for _ in enumerate_connected(2)) == 1
    assert sum(1 for _ in enumerate_connected(3)) == 4
    assert sum(1 for _ in enumerate_connected(5)) == 728
    assert sum(1 for _ in enumerate_trees(4)) == 16
    assert sum(1 for _ in enumerate_trees(2)) == 1
    assert all(is_tree(t) for t in enumerate_trees(5))
    with pytest.raises(ValueError):
        next(enumerate_connected(8))
    with pytest.raises(ValueError):
        next(enumerate_trees(10))


def test_enumerate_connected_distinct():
    graphs = list(enumerate_connected(4))
    assert len(set(graphs)) == len(graphs) == 38


def test_prufer_known():
    assert prufer_decode([3, 3, 3, 4]).edges() == [(0, 3), (1, 3), (2, 3), (3, 4), (4, 5)]


@settings(max_examples=100, deadline=None)
@given(st.integers(3, 30).flatmap(lambda n: st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2)))
def test_prufer_round_trip(seq):
    t = prufer_decode(seq)
    assert is_tree(t)
    assert prufer_encode(t) == list(seq)
    ref = nx.from_prufer_sequence(seq)
    assert t.edges() == sorted(tuple(sorted(e)) for e in ref.edges())


def test_family_spec():
    spec = FamilySpec(Family.CLIQUE_RING, d=5, m=10)
    assert spec.transitive_by_construction
    assert spec.build() == clique_ring(5, 10)
    assert spec.to_dict()["family"] == "clique_ring"
    assert not FamilySpec("h_family", d=3, t=2).transitive_by_construction
    with pytest.raises(ValueError):
        FamilySpec(Family.H_FAMILY, d=3)
    with pytest.raises(ValueError):
        FamilySpec(Family.PATH, n=4, d=2)

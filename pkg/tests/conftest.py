from __future__ import annotations

import random

import networkx as nx
import pytest

from graphpow.graph import Graph, from_edges


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    return from_edges(h.number_of_nodes(), h.edges())


def gnp(n: int, p: float, seed: int) -> Graph:
    return from_nx(nx.gnp_random_graph(n, p, seed=seed))


@pytest.fixture
def rng():
    return random.Random(12345)

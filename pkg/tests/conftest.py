"""Shared fixtures: small-universe caches and cross-library helpers."""

from __future__ import annotations

import random

import networkx as nx
import pytest

from minorsieve import EnumFilter, Graph, generate_graphs


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.order))
    h.add_edges_from(g.sorted_edges())
    return h


def from_networkx(h: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(sorted(h.nodes, key=repr))}
    return Graph(h.number_of_nodes(),
                 [(index[u], index[v]) for u, v in h.edges])


def random_graph(rng: random.Random, order: int,
                 p: float | None = None) -> Graph:
    """Erdos-Renyi draw; edge probability itself random when not given."""
    if p is None:
        p = rng.uniform(0.1, 0.9)
    edges = [(u, v) for u in range(order) for v in range(u + 1, order)
             if rng.random() < p]
    return Graph(order, edges)


@pytest.fixture(scope="session")
def reps_by_order() -> dict[int, list[Graph]]:
    """One representative per isomorphism class, orders 1 through 6."""
    return {
        n: generate_graphs(EnumFilter(order=n))
        for n in range(1, 7)
    }


@pytest.fixture(scope="session")
def reps7() -> list[Graph]:
    """All 1044 isomorphism classes of order 7."""
    return generate_graphs(EnumFilter(order=7))

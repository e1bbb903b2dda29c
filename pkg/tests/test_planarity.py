"""Planarity decisions against two independent oracles.

The left-right test is cross-checked two ways: against the published
planarity check in networkx on random and exhaustive pools, and against
the Kuratowski-minor oracle (planar iff neither a K5 nor a K3,3 minor),
which shares no code path with the embedding-based test.
"""

from __future__ import annotations

import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from minorsieve import Graph, find_k_subgraph, has_minor, is_planar

from conftest import random_graph, to_networkx

K5 = Graph.complete(5)
K33 = Graph.complete_bipartite(3, 3)


def nx_planar(g: Graph) -> bool:
    return nx.check_planarity(to_networkx(g), counterexample=False)[0]


def test_known_planar():
    for g in (Graph(1), Graph.complete(4), Graph.cycle(8), Graph.path(6),
              K5.delete_edge(0, 1), K33.delete_edge(0, 3),
              Graph.complete_bipartite(2, 7)):
        assert is_planar(g)


def test_known_nonplanar():
    petersen = Graph(10, [(i, (i + 1) % 5) for i in range(5)]
                     + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
                     + [(i, i + 5) for i in range(5)])
    for g in (K5, K33, Graph.complete(6), Graph.complete_bipartite(4, 3),
              petersen):
        assert not is_planar(g)


def test_subdivisions_stay_nonplanar():
    g = K5
    for _ in range(4):
        u, v = g.sorted_edges()[0]
        g = g.subdivide_edge(u, v)
        assert not is_planar(g)


def test_exhaustive_agreement_with_networkx(reps_by_order):
    for n, reps in reps_by_order.items():
        for g in reps:
            assert is_planar(g) == nx_planar(g), (n, g.sorted_edges())


def test_exhaustive_agreement_with_minor_oracle(reps_by_order, reps7):
    pools = list(reps_by_order.values()) + [reps7]
    for reps in pools:
        for g in reps:
            by_minors = not has_minor(g, K5) and not has_minor(g, K33)
            assert is_planar(g) == by_minors, g.sorted_edges()


def test_nonplanar_class_counts(reps_by_order, reps7):
    # complements of the planar-graph counts 33, 142, 822 at orders 5-7
    assert sum(not is_planar(g) for g in reps_by_order[5]) == 1
    assert sum(not is_planar(g) for g in reps_by_order[6]) == 14
    assert sum(not is_planar(g) for g in reps7) == 222


@given(st.data())
@settings(max_examples=120, deadline=None)
def test_random_agreement_with_networkx(data):
    n = data.draw(st.integers(min_value=1, max_value=10))
    seed = data.draw(st.integers(min_value=0, max_value=10**9))
    g = random_graph(random.Random(seed), n)
    assert is_planar(g) == nx_planar(g)


def test_minor_oracle_target_validation():
    with pytest.raises(ValueError):
        has_minor(K5, Graph.complete(4))


def _validate_witness(g: Graph, w) -> None:
    assert w.kind in ("K5", "K33")
    branch = w.branch_vertices
    if w.kind == "K5":
        assert len(branch) == 5
        expected_paths = 10
    else:
        assert len(branch) == 6
        expected_paths = 9
    assert len(w.paths) == expected_paths
    seen_interior = set()
    for path in w.paths:
        assert path[0] in branch and path[-1] in branch
        for a, b in zip(path, path[1:]):
            assert g.has_edge(a, b)
        interior = path[1:-1]
        assert all(v not in branch for v in interior)
        # interior vertices belong to one path only
        assert not (set(interior) & seen_interior)
        seen_interior.update(interior)
    # the witness itself is a nonplanar subgraph of g
    sub = Graph(g.order, list(w.edges()))
    assert not is_planar(sub)
    if w.kind == "K33":
        # branch vertices split into two sides of three, paths crossing
        ends = {frozenset((p[0], p[-1])) for p in w.paths}
        assert len(ends) == 9


def test_kuratowski_witness_on_anchors():
    for g in (K5, K33, Graph.complete(6), Graph.complete_bipartite(4, 4)):
        w = find_k_subgraph(g)
        assert w is not None
        _validate_witness(g, w)
    assert find_k_subgraph(Graph.complete(4)) is None


def test_kuratowski_witness_random(reps7):
    rng = random.Random(23)
    checked = 0
    for g in rng.sample(reps7, 400):
        w = find_k_subgraph(g)
        if is_planar(g):
            assert w is None
        else:
            _validate_witness(g, w)
            checked += 1
    assert checked > 30

"""Canonical enumeration counts and the minimal-member search driver."""

from __future__ import annotations

import pytest

from minorsieve import EnumFilter, Property, build_named, canonical_key, \
    count_graphs, enumerate_graphs, enumerate_partition, generate_graphs, \
    search_minor_minimal

# unlabeled simple graphs on n vertices (OEIS A000088)
ALL_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}
# connected ones (A001349)
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}
# nonplanar classes first appear at order 5
NONPLANAR_COUNTS = {4: 0, 5: 1, 6: 14, 7: 222}


@pytest.mark.parametrize("order,expected",
                         sorted((o, c) for o, c in ALL_COUNTS.items() if o < 8))
def test_total_class_counts(order, expected):
    assert count_graphs(EnumFilter(order=order)) == expected


@pytest.mark.parametrize("order,expected",
                         sorted((o, c) for o, c in CONNECTED_COUNTS.items() if o < 8))
def test_connected_class_counts(order, expected):
    assert count_graphs(EnumFilter(order=order, connected=True)) == expected


def test_order_8_universe():
    assert count_graphs(EnumFilter(order=8)) == ALL_COUNTS[8]


@pytest.mark.parametrize("order,expected", sorted(NONPLANAR_COUNTS.items()))
def test_nonplanar_class_counts(order, expected):
    filt = EnumFilter(order=order, planarity="nonplanar")
    assert count_graphs(filt) == expected


def test_enumeration_is_isomorphism_free(reps_by_order):
    for order, reps in reps_by_order.items():
        keys = {canonical_key(g) for g in reps}
        assert len(keys) == len(reps) == ALL_COUNTS[order]
        assert all(g.order == order for g in reps)


def test_filters_compose():
    filt = EnumFilter(order=6, min_degree=2, connected=True,
                      planarity="nonplanar")
    found = list(enumerate_graphs(filt))
    assert count_graphs(filt) == len(found)
    assert all(min(len(g.neighbors(v)) for v in range(6)) >= 2
               for g in found)
    # K5 with a pendant leaf fails min_degree; K6 passes everything
    assert canonical_key(build_named("K6")) in \
        {canonical_key(g) for g in found}


def test_filter_validation():
    with pytest.raises(ValueError):
        EnumFilter(order=0)
    with pytest.raises(ValueError):
        EnumFilter(order=5, min_degree=-1)
    with pytest.raises(ValueError):
        EnumFilter(order=5, planarity="almost")
    with pytest.raises(ValueError):
        EnumFilter(order=5, max_size=11)


def test_size_window():
    filt = EnumFilter(order=5, min_size=9, max_size=10)
    got = {(g.order, g.size) for g in enumerate_graphs(filt)}
    assert got == {(5, 9), (5, 10)}  # K5-e and K5


def test_partition_shards_tile_the_universe():
    filt = EnumFilter(order=7, planarity="nonplanar")
    whole = {canonical_key(g) for g in enumerate_graphs(filt)}
    shards = [
        {canonical_key(g) for g in enumerate_partition(filt, s, 4)}
        for s in range(4)
    ]
    assert set().union(*shards) == whole
    assert sum(len(s) for s in shards) == len(whole)  # pairwise disjoint


def test_partition_argument_validation():
    filt = EnumFilter(order=5)
    with pytest.raises(ValueError):
        list(enumerate_partition(filt, 4, 4))
    with pytest.raises(ValueError):
        list(enumerate_partition(filt, 0, 0))


def test_generate_graphs_matches_enumerate():
    filt = EnumFilter(order=5, connected=True)
    a = [g.edges for g in generate_graphs(filt)]
    b = [g.edges for g in enumerate_graphs(filt)]
    assert a == b


def test_worker_pool_is_deterministic():
    filt = EnumFilter(order=6, planarity="nonplanar")
    serial = [sorted(g.edges) for g in generate_graphs(filt, jobs=1)]
    pooled = [sorted(g.edges) for g in generate_graphs(filt, jobs=4)]
    assert serial == pooled


def test_search_an_order_6():
    report = search_minor_minimal(Property.AN, orders=range(1, 7))
    found_keys = {canonical_key(g) for g in report.found}
    want = {canonical_key(build_named("K5-e")),
            canonical_key(build_named("K33-e"))}
    assert found_keys == want
    assert report.found_by_order() == {5: 1, 6: 1}
    # the AN pool is the planar classes only
    planar = sum(ALL_COUNTS[n] - NONPLANAR_COUNTS.get(n, 0)
                 for n in range(1, 7))
    assert report.scanned == planar == 193


def test_search_rejects_orders_above_cap():
    from minorsieve import ResourceLimitError
    with pytest.raises(ResourceLimitError):
        search_minor_minimal(Property.AN, orders=[11])
    with pytest.raises(ValueError):
        search_minor_minimal(Property.AN, orders=[])


def test_report_round_trip_fields():
    report = search_minor_minimal(Property.CAN, orders=[5])
    assert report.prop is Property.CAN
    assert report.orders == (5,)
    assert report.wall_time >= 0
    assert len(report.found) == 1

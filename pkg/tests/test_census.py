import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gpgraph import (
    CYCLE_TYPES,
    CubicGraph,
    GpParams,
    LARGE_SIGMA_TRIPLES,
    SigmaPartition,
    SigmaTriple,
    SmallGraphError,
    build,
    count_8cycles_through,
    predict_sigma,
    random_cubic,
    sigma_census,
    sigma_partition,
)


def test_cycle_type_table():
    assert [(t.label, t.delta) for t in CYCLE_TYPES] == [
        ("C0", (0, 0, 1)),
        ("C1", (1, 2, 5)),
        ("C2", (2, 2, 4)),
        ("C3", (3, 2, 3)),
        ("C4", (4, 2, 2)),
        ("C5", (5, 2, 1)),
        ("C6", (1, 2, 1)),
        ("C7", (2, 4, 2)),
    ]


def test_uniform_counts_gp_13_5():
    g, _ = build(GpParams(13, 5))
    assert {count_8cycles_through(g, e) for e in range(g.num_edges)} == {8}


def test_zero_counts_prism():
    g, _ = build(GpParams(3, 1))
    assert {count_8cycles_through(g, e) for e in range(g.num_edges)} == {0}


def test_counts_by_class_gp_50_5():
    g, lab = build(GpParams(50, 5))
    assert count_8cycles_through(g, g.edge_id(lab.outer[0], lab.inner[0])) == 6
    assert count_8cycles_through(g, g.edge_id(lab.outer[0], lab.outer[1])) == 7
    assert count_8cycles_through(g, g.edge_id(lab.inner[0], lab.inner[5])) == 3


def test_partition_gp_24_5_single_part():
    g, _ = build(GpParams(24, 5))
    partition = sigma_partition(g)
    assert set(partition.parts) == {8}
    assert len(partition.parts[8]) == 72


def test_partition_gp_50_5_three_parts():
    g, lab = build(GpParams(50, 5))
    partition = sigma_partition(g)
    assert {s: len(ids) for s, ids in partition.parts.items()} == {7: 50, 6: 50, 3: 50}
    n = 50
    outer = {g.edge_id(lab.outer[i], lab.outer[(i + 1) % n]) for i in range(n)}
    spoke = {g.edge_id(lab.outer[i], lab.inner[i]) for i in range(n)}
    inner = {g.edge_id(lab.inner[i], lab.inner[(i + 5) % n]) for i in range(n)}
    assert partition.parts[7] == frozenset(outer)
    assert partition.parts[6] == frozenset(spoke)
    assert partition.parts[3] == frozenset(inner)


def test_partition_gp_41_1_two_parts():
    # k = 1: the 4-spoke cycle family degenerates, so spokes sit at sigma 2
    # and the outer and inner rims merge at sigma 3
    g, lab = build(GpParams(41, 1))
    partition = sigma_partition(g)
    assert {s: len(ids) for s, ids in partition.parts.items()} == {2: 41, 3: 82}
    spoke = {g.edge_id(lab.outer[i], lab.inner[i]) for i in range(41)}
    assert partition.parts[2] == frozenset(spoke)


@pytest.mark.parametrize(
    "n,k,expected",
    [
        (82, 40, (3, 6, 3)),
        (50, 5, (7, 6, 3)),
        (47, 7, (2, 4, 2)),
        (41, 1, (3, 2, 3)),
        (48, 6, (2, 4, 3)),
        (41, 20, (4, 6, 6)),
        (42, 2, (6, 6, 4)),
    ],
)
def test_predict_sigma(n, k, expected):
    assert predict_sigma(GpParams(n, k)).as_tuple() == expected


@pytest.mark.parametrize("n,k", [(40, 3), (13, 5), (3, 1)])
def test_predict_sigma_small_guard(n, k):
    with pytest.raises(SmallGraphError):
        predict_sigma(GpParams(n, k))


def test_nine_admissible_triples():
    assert len(LARGE_SIGMA_TRIPLES) == 9
    assert (3, 2, 3) in LARGE_SIGMA_TRIPLES
    assert (2, 4, 2) in LARGE_SIGMA_TRIPLES
    for triple in LARGE_SIGMA_TRIPLES:
        assert not (triple[0] == triple[1] == triple[2])


def test_partition_invariants(petersen):
    partition = sigma_partition(petersen)
    seen = set()
    for value, ids in partition.parts.items():
        for i in ids:
            assert partition.per_edge[i] == value
        assert not (seen & ids)
        seen |= ids
    assert seen == set(range(petersen.num_edges))


def test_kernel_matches_python_fallback():
    for g in [
        build(GpParams(20, 4))[0],
        build(GpParams(14, 3))[0],
        random_cubic(20, seed=11),
    ]:
        fast = sigma_census(g)
        slow = sigma_census(g, force_python=True)
        assert fast == slow


def test_census_matches_per_edge_counts():
    for g in [build(GpParams(17, 4))[0], random_cubic(18, seed=3)]:
        values, _ = sigma_census(g)
        for e in range(g.num_edges):
            assert values[e] == count_8cycles_through(g, e)


def test_census_deterministic():
    g = random_cubic(24, seed=5)
    assert sigma_census(g) == sigma_census(g)


def test_step_counter_linear_bound():
    for n in (50, 100, 200):
        g, _ = build(GpParams(n, 3))
        _, steps = sigma_census(g)
        assert 0 < steps <= 1000 * g.num_vertices


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10_000), st.sampled_from([10, 12, 14, 16, 18, 20]))
def test_count_invariant_under_relabeling(seed, nv):
    """Counts are a graph property: they commute with random relabelings."""
    g = random_cubic(nv, seed=seed % 50)
    rng = random.Random(seed)
    perm = list(range(nv))
    rng.shuffle(perm)
    h = CubicGraph([(perm[u], perm[v]) for u, v in g.edges], num_vertices=nv)
    for e in random.Random(seed + 1).sample(range(g.num_edges), 5):
        u, v = g.edges[e]
        assert count_8cycles_through(g, e) == count_8cycles_through(
            h, h.edge_id(perm[u], perm[v])
        )


def test_from_values_round_trip():
    partition = SigmaPartition.from_values((4, 4, 2, 4, 2, 9))
    assert partition.per_edge == (4, 4, 2, 4, 2, 9)
    assert partition.parts == {4: frozenset({0, 1, 3}), 2: frozenset({2, 4}), 9: frozenset({5})}


def test_sigma_triple_tuple():
    assert SigmaTriple(7, 6, 3).as_tuple() == (7, 6, 3)

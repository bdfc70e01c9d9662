from collections import deque
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gpgraph import (
    GpLabeling,
    GpParams,
    InvalidParamsError,
    build,
    connected_components,
    enumerate_params,
    inner_cycle_structure,
)


def valid_params():
    return st.integers(3, 60).flatmap(
        lambda n: st.tuples(st.just(n), st.integers(1, max(1, (n - 1) // 2)))
    ).map(lambda t: GpParams(*t))


def girth(g):
    best = None
    for start in range(g.num_vertices):
        dist = {start: 0}
        parent = {start: -1}
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in g.adjacency[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    length = dist[x] + dist[y] + 1
                    if best is None or length < best:
                        best = length
    return best


def is_bipartite(g):
    color = {0: 0}
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for y in g.adjacency[x]:
            if y not in color:
                color[y] = 1 - color[x]
                queue.append(y)
            elif color[y] == color[x]:
                return False
    return True


def test_petersen():
    g, _ = build(GpParams(5, 2))
    assert g.num_vertices == 10
    assert g.num_edges == 15
    assert girth(g) == 5


def test_cube():
    g, _ = build(GpParams(4, 1))
    assert g.num_vertices == 8
    assert g.num_edges == 12
    assert is_bipartite(g)


@pytest.mark.parametrize("n,k", [(6, 3), (3, 0), (2, 1), (5, -1), (10, 5), (10, 6)])
def test_invalid_params(n, k):
    with pytest.raises(InvalidParamsError):
        GpParams(n, k)


@pytest.mark.parametrize("n,k,expected", [(12, 3, (3, 4)), (13, 5, (1, 13)), (50, 5, (5, 10))])
def test_inner_cycle_structure(n, k, expected):
    assert inner_cycle_structure(GpParams(n, k)) == expected


def test_enumerate_params():
    assert [(p.n, p.k) for p in enumerate_params(3)] == [(3, 1)]
    assert [(p.n, p.k) for p in enumerate_params(10)] == [(10, 1), (10, 2), (10, 3), (10, 4)]
    assert [(p.n, p.k) for p in enumerate_params(7)] == [(7, 1), (7, 2), (7, 3)]


def test_small_pair_count():
    assert sum(len(enumerate_params(n)) for n in range(3, 41)) == 380


def test_labeling_must_partition():
    with pytest.raises(ValueError):
        GpLabeling(outer=(0, 1, 2), inner=(2, 3, 4))
    with pytest.raises(ValueError):
        GpLabeling(outer=(0, 1, 2), inner=(3, 4, 7))


@settings(max_examples=30, deadline=None)
@given(valid_params())
def test_build_structure(p):
    g, lab = build(p)
    assert g.num_vertices == 2 * p.n
    assert g.num_edges == 3 * p.n
    assert len(connected_components(g)) == 1
    # removing the spokes leaves the outer n-cycle plus gcd(n,k) inner cycles
    spokes = [g.edge_id(lab.outer[i], lab.inner[i]) for i in range(p.n)]
    comps = connected_components(g, without_edges=spokes)
    count, length = inner_cycle_structure(p)
    assert count == gcd(p.n, p.k)
    expected = sorted([p.n] + [length] * count, reverse=True)
    assert sorted((len(c) for c in comps), reverse=True) == expected


@settings(max_examples=10, deadline=None)
@given(valid_params())
def test_labeling_matches_edges(p):
    g, lab = build(p)
    for i in range(p.n):
        assert g.has_edge(lab.outer[i], lab.outer[(i + 1) % p.n])
        assert g.has_edge(lab.outer[i], lab.inner[i])
        assert g.has_edge(lab.inner[i], lab.inner[(i + p.k) % p.n])

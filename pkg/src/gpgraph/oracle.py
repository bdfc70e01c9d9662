"""Brute-force ground truth: whole-graph cycle enumeration, recognition by
isomorphism search against every candidate parameter pair, and seeded random
cubic graph generation for negative controls.

Everything here trades speed for independence from the linear pipeline, and
is guarded against accidental use on large inputs.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass

from .construct import GpLabeling, build, enumerate_params
from .errors import TooLargeError
from .graph import CubicGraph, EdgeId, connected_components
from .recognizer import Reason, RecognitionResult, verify_mapping

_CYCLE_LIMIT = 200
_ISO_LIMIT = 120


@dataclass(frozen=True)
class IsoWitness:
    """Vertex bijection pattern -> host found by the isomorphism search."""

    mapping: tuple[int, ...]


def enumerate_8cycles_global(g: CubicGraph, e: EdgeId) -> set[frozenset[tuple[int, int]]]:
    """All 8-cycles through e by whole-graph path enumeration.

    Each cycle is returned as the frozenset of its 8 edges (normalized
    pairs); distinct cycles on the same vertex set stay distinct.
    """
    if g.num_vertices > _CYCLE_LIMIT:
        raise TooLargeError(g.num_vertices, _CYCLE_LIMIT)
    a, b = g.edges[e]
    cycles: set[frozenset[tuple[int, int]]] = set()
    path = [a]
    on_path = {a}

    def walk(cur: int, length: int):
        for w in g.adjacency[cur]:
            if w == b:
                if length == 7:
                    verts = path + [b, a]
                    cycles.add(
                        frozenset(
                            (x, y) if x < y else (y, x)
                            for x, y in zip(verts, verts[1:])
                        )
                    )
            elif w not in on_path and length < 7:
                path.append(w)
                on_path.add(w)
                walk(w, length + 1)
                on_path.remove(w)
                path.pop()

    walk(a, 1)
    return cycles


def count_8cycles_global(g: CubicGraph, e: EdgeId) -> int:
    """Reference 8-cycle count through e, with no locality shortcut."""
    return len(enumerate_8cycles_global(g, e))


def _find_isomorphism(pattern: CubicGraph, host: CubicGraph) -> IsoWitness | None:
    """Backtracking search for an edge-preserving bijection pattern -> host.

    Pattern vertices are matched in BFS order from vertex 0, so every
    candidate must be adjacent to the images of its already-mapped neighbors;
    with equal edge counts, edge preservation implies isomorphism.
    """
    n = pattern.num_vertices
    order = []
    seen = [False] * n
    queue = deque([0])
    seen[0] = True
    while queue:
        x = queue.popleft()
        order.append(x)
        for y in pattern.adjacency[x]:
            if not seen[y]:
                seen[y] = True
                queue.append(y)
    mapped_neighbors = []
    pos = {v: i for i, v in enumerate(order)}
    for i, v in enumerate(order):
        mapped_neighbors.append([w for w in pattern.adjacency[v] if pos[w] < i])

    mapping = [-1] * n
    used = [False] * host.num_vertices

    def backtrack(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        anchors = mapped_neighbors[i]
        if anchors:
            candidates = [
                w for w in host.adjacency[mapping[anchors[0]]] if not used[w]
            ]
        else:
            candidates = [w for w in range(host.num_vertices) if not used[w]]
        for c in candidates:
            ok = True
            for an in anchors:
                if not host.has_edge(c, mapping[an]):
                    ok = False
                    break
            if ok:
                mapping[v] = c
                used[c] = True
                if backtrack(i + 1):
                    return True
                used[c] = False
                mapping[v] = -1
        return False

    if backtrack(0):
        return IsoWitness(tuple(mapping))
    return None


def brute_force_recognize(g: CubicGraph) -> RecognitionResult:
    """Decide membership by isomorphism search against every GP(n, k) candidate."""
    if g.num_vertices > _ISO_LIMIT:
        raise TooLargeError(g.num_vertices, _ISO_LIMIT)
    if g.num_vertices % 2 != 0:
        return RecognitionResult.reject(Reason.ODD_ORDER)
    n = g.num_vertices // 2
    for params in enumerate_params(n):
        reference, _ = build(params)
        witness = _find_isomorphism(reference, g)
        if witness is not None:
            labeling = GpLabeling(
                outer=witness.mapping[:n], inner=witness.mapping[n:]
            )
            result = RecognitionResult.accept(params, labeling)
            if not verify_mapping(g, params, labeling):
                raise RuntimeError("isomorphism witness failed verification")
            return result
    return RecognitionResult.reject(Reason.ORACLE_REJECTED)


def random_cubic(num_vertices: int, seed: int) -> CubicGraph:
    """Random simple connected cubic graph via pairing-model sampling.

    Loops, parallel edges and disconnected outcomes are rejected and the
    pairing is redrawn, so the result is deterministic per seed.
    """
    if num_vertices < 4 or num_vertices % 2 != 0:
        raise ValueError("num_vertices must be an even integer >= 4")
    rng = random.Random(seed)
    while True:
        stubs = list(range(num_vertices)) * 3
        rng.shuffle(stubs)
        edges = set()
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v:
                ok = False
                break
            key = (u, v) if u < v else (v, u)
            if key in edges:
                ok = False
                break
            edges.add(key)
        if not ok:
            continue
        g = CubicGraph(sorted(edges), num_vertices=num_vertices)
        if len(connected_components(g)) == 1:
            return g


def two_edge_swap(g: CubicGraph, seed: int) -> CubicGraph:
    """Rewire two independent edges of g, keeping the result simple, cubic
    and connected; deterministic per seed.

    Raises ValueError if no admissible swap is found (e.g. K_4, where every
    rewiring creates a parallel edge)."""
    rng = random.Random(seed)
    edges = list(g.edges)
    for _ in range(100_000):
        (a, b), (c, d) = rng.sample(edges, 2)
        if len({a, b, c, d}) != 4:
            continue
        if rng.random() < 0.5:
            new1, new2 = (a, c), (b, d)
        else:
            new1, new2 = (a, d), (b, c)
        if g.has_edge(*new1) or g.has_edge(*new2):
            continue
        replaced = {(a, b), (c, d)}
        candidate_edges = [e for e in edges if e not in replaced]
        candidate_edges.append(tuple(sorted(new1)))
        candidate_edges.append(tuple(sorted(new2)))
        candidate = CubicGraph(candidate_edges, num_vertices=g.num_vertices)
        if len(connected_components(candidate)) == 1:
            return candidate
    raise ValueError("no admissible two-edge swap exists for this graph")

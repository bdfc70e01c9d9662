"""Immutable cubic-graph representation and the structural queries used by recognition.

Vertex ids are dense integers 0..num_vertices-1.  Edges live in a canonical
list sorted lexicographically on (min endpoint, max endpoint); the position of
an edge in that list is its EdgeId.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import (
    DuplicateEdgeError,
    MalformedLineError,
    NonContiguousIdsError,
    NotCubicError,
    SelfLoopError,
)

EdgeId = int


class CubicGraph:
    """A simple 3-regular graph, immutable after construction.

    Attributes:
        num_vertices: number of vertices (vertex ids are 0..num_vertices-1).
        edges: canonical tuple of (u, v) pairs with u < v, sorted; index = EdgeId.
        adjacency: per-vertex tuple of its 3 neighbors, ascending.
    """

    __slots__ = ("num_vertices", "edges", "adjacency", "_edge_index", "_csr")

    def __init__(self, edges: Iterable[tuple[int, int]], num_vertices: int | None = None):
        pairs = []
        max_seen = -1
        for u, v in edges:
            if u == v:
                raise SelfLoopError(u)
            a, b = (u, v) if u < v else (v, u)
            pairs.append((a, b))
            if b > max_seen:
                max_seen = b
        pairs.sort()
        for i in range(1, len(pairs)):
            if pairs[i] == pairs[i - 1]:
                raise DuplicateEdgeError(pairs[i])
        n = max_seen + 1 if num_vertices is None else num_vertices
        degree = [0] * n
        seen = [False] * n
        for a, b in pairs:
            degree[a] += 1
            degree[b] += 1
            seen[a] = True
            seen[b] = True
        for v in range(n):
            if not seen[v]:
                raise NonContiguousIdsError(v, max_seen)
        for v in range(n):
            if degree[v] != 3:
                raise NotCubicError(v, degree[v])
        adj: list[list[int]] = [[] for _ in range(n)]
        for a, b in pairs:
            adj[a].append(b)
            adj[b].append(a)
        object.__setattr__(self, "num_vertices", n)
        object.__setattr__(self, "edges", tuple(pairs))
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(ns)) for ns in adj))
        object.__setattr__(self, "_edge_index", {e: i for i, e in enumerate(pairs)})
        object.__setattr__(self, "_csr", None)

    def __setattr__(self, name, value):
        raise AttributeError("CubicGraph is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, CubicGraph)
            and self.num_vertices == other.num_vertices
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.num_vertices, self.edges))

    def __repr__(self):
        return f"CubicGraph(num_vertices={self.num_vertices}, num_edges={self.num_edges})"

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, int, int]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self._edge_index or (v, u) in self._edge_index

    def edge_id(self, u: int, v: int) -> EdgeId:
        key = (u, v) if u < v else (v, u)
        return self._edge_index[key]

    def csr_arrays(self):
        """Flat neighbor array (stride 3) plus edge endpoint arrays, cached."""
        cached = object.__getattribute__(self, "_csr")
        if cached is None:
            if self.num_edges == 0:
                empty = np.empty(0, np.int32)
                cached = (empty, empty, empty)
            else:
                nbrs = np.asarray(self.adjacency, np.int32).reshape(-1)
                endpoints = np.asarray(self.edges, np.int32)
                cached = (nbrs, endpoints[:, 0].copy(), endpoints[:, 1].copy())
            object.__setattr__(self, "_csr", cached)
        return cached


def parse_edge_list(text: str | bytes) -> CubicGraph:
    """Parse the edge-list text format into a validated CubicGraph.

    One edge per line as two whitespace-separated decimal vertex ids; blank
    lines and lines starting with '#' are ignored.  The vertex count is
    max id + 1, and ids must cover 0..max with every vertex of degree 3.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    pairs: list[tuple[int, int]] = []
    seen_pairs: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2 or not tokens[0].isdigit() or not tokens[1].isdigit():
            raise MalformedLineError(lineno, raw)
        u, v = int(tokens[0]), int(tokens[1])
        if u == v:
            raise SelfLoopError(u, lineno)
        key = (u, v) if u < v else (v, u)
        if key in seen_pairs:
            raise DuplicateEdgeError(key, lineno)
        seen_pairs.add(key)
        pairs.append(key)
    return CubicGraph(pairs)


def serialize_edge_list(g: CubicGraph) -> str:
    """Canonical text form: edges in canonical order, one per line, no comments."""
    return "".join(f"{u} {v}\n" for u, v in g.edges)


def connected_components(
    g: CubicGraph,
    restricted_to: Iterable[int] | None = None,
    without_edges: Iterable[EdgeId] | None = None,
) -> list[frozenset[int]]:
    """Components of g (optionally restricted to a vertex set, with edges removed).

    Ordered by decreasing size; ties broken by smallest contained vertex id.
    """
    if restricted_to is None:
        allowed = None
    else:
        allowed = {v for v in restricted_to if 0 <= v < g.num_vertices}
    removed: set[tuple[int, int]] = set()
    if without_edges is not None:
        removed = {g.edges[i] for i in without_edges}
    vertices = range(g.num_vertices) if allowed is None else sorted(allowed)
    visited = [False] * g.num_vertices
    components = []
    for start in vertices:
        if visited[start]:
            continue
        visited[start] = True
        comp = [start]
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in g.adjacency[x]:
                if visited[y]:
                    continue
                if allowed is not None and y not in allowed:
                    continue
                if removed and ((x, y) if x < y else (y, x)) in removed:
                    continue
                visited[y] = True
                comp.append(y)
                queue.append(y)
        components.append(frozenset(comp))
    components.sort(key=lambda c: (-len(c), min(c)))
    return components


def is_connected(g: CubicGraph) -> bool:
    """True iff g is nonempty and has a single connected component."""
    if g.num_vertices == 0:
        return False
    visited = [False] * g.num_vertices
    visited[0] = True
    count = 1
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for y in g.adjacency[x]:
            if not visited[y]:
                visited[y] = True
                count += 1
                queue.append(y)
    return count == g.num_vertices


def is_two_regular(g: CubicGraph, u: Iterable[int]) -> bool:
    """True iff every vertex of u has exactly 2 neighbors inside u."""
    us = set(u)
    if not us or min(us) < 0 or max(us) >= g.num_vertices:
        return False
    mask = bytearray(g.num_vertices)
    for v in us:
        mask[v] = 1
    adjacency = g.adjacency
    for v in us:
        a, b, c = adjacency[v]
        if mask[a] + mask[b] + mask[c] != 2:
            return False
    return True


def is_cycle_graph(g: CubicGraph, u: Iterable[int]) -> bool:
    """True iff the subgraph induced by u is a single cycle covering all of u."""
    us = set(u)
    if len(us) < 3:
        return False
    if not is_two_regular(g, us):
        return False
    # 2-regular and connected => one cycle; walk instead of BFS
    mask = bytearray(g.num_vertices)
    for v in us:
        mask[v] = 1
    start = next(iter(us))
    prev = start
    cur = next(w for w in g.adjacency[start] if mask[w])
    length = 1
    while cur != start:
        a, b, c = g.adjacency[cur]
        if mask[a] and a != prev:
            nxt = a
        elif mask[b] and b != prev:
            nxt = b
        else:
            nxt = c
        prev, cur = cur, nxt
        length += 1
    return length == len(us)


@dataclass(frozen=True)
class EdgeBall:
    """Induced subgraph on all vertices within a given distance of an edge.

    ``vertices[i]`` is the original id of local vertex i; the two endpoints of
    the center edge are local ids 0 and 1.  ``adjacency`` is the induced
    adjacency in local ids.
    """

    vertices: tuple[int, ...]
    adjacency: tuple[tuple[int, ...], ...]
    center: tuple[int, int]

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    def to_original(self, local_id: int) -> int:
        return self.vertices[local_id]


def edge_ball(g: CubicGraph, e: EdgeId, radius: int) -> EdgeBall:
    """Induced subgraph on vertices at distance <= radius from either endpoint of e."""
    if not 0 <= radius <= 8:
        raise ValueError(f"radius must be in 0..8, got {radius}")
    a, b = g.edges[e]
    local = {a: 0, b: 1}
    verts = [a, b]
    dist = [0, 0]
    head = 0
    while head < len(verts):
        v = verts[head]
        d = dist[head]
        head += 1
        if d == radius:
            continue
        for w in g.adjacency[v]:
            if w not in local:
                local[w] = len(verts)
                verts.append(w)
                dist.append(d + 1)
    adj = tuple(
        tuple(local[w] for w in g.adjacency[v] if w in local) for v in verts
    )
    return EdgeBall(vertices=tuple(verts), adjacency=adj, center=(0, 1))

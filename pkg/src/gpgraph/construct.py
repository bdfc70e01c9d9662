"""Construction of generalized Petersen graphs GP(n, k) with their canonical labeling.

GP(n, k) has vertices u_0..u_{n-1} (outer rim) and v_0..v_{n-1} (inner rims),
with edges u_i u_{i+1}, spokes u_i v_i, and v_i v_{i+k}, indices mod n.  Here
u_i is vertex i and v_i is vertex n + i.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import InvalidParamsError
from .graph import CubicGraph


@dataclass(frozen=True)
class GpParams:
    """Validated parameter pair (n, k) with 1 <= k < n/2 and n >= 3."""

    n: int
    k: int

    def __post_init__(self):
        if self.n < 3:
            raise InvalidParamsError(self.n, self.k, "n must be at least 3")
        if self.k < 1:
            raise InvalidParamsError(self.n, self.k, "k must be at least 1")
        if 2 * self.k >= self.n:
            raise InvalidParamsError(self.n, self.k, "k must satisfy 2k < n")


@dataclass(frozen=True)
class GpLabeling:
    """Assignment of graph vertex ids to the rim positions u_0..u_{n-1}, v_0..v_{n-1}."""

    outer: tuple[int, ...]
    inner: tuple[int, ...]

    def __post_init__(self):
        n = len(self.outer)
        all_ids = set(self.outer) | set(self.inner)
        if len(self.inner) != n or len(all_ids) != 2 * n or all_ids != set(range(2 * n)):
            raise ValueError("labeling must split 0..2n-1 into n outer and n inner vertices")


def build(p: GpParams) -> tuple[CubicGraph, GpLabeling]:
    """Construct GP(n, k) with the identity labeling u_i -> i, v_i -> n + i."""
    n, k = p.n, p.k
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))
        edges.append((i, n + i))
        edges.append((n + i, n + (i + k) % n))
    g = CubicGraph(edges, num_vertices=2 * n)
    labeling = GpLabeling(outer=tuple(range(n)), inner=tuple(range(n, 2 * n)))
    return g, labeling


def inner_cycle_structure(p: GpParams) -> tuple[int, int]:
    """(count, length) of the disjoint cycles induced by the inner edges."""
    c = gcd(p.n, p.k)
    return c, p.n // c


def enumerate_params(n: int) -> list[GpParams]:
    """All valid GpParams for a given n, ascending in k."""
    if n < 3:
        return []
    return [GpParams(n, k) for k in range(1, (n - 1) // 2 + 1)]

"""Linear-time recognition of generalized Petersen graphs.

The pipeline classifies every edge by its 8-cycle count, picks a minimum-size
part of the resulting partition as the candidate rim (or spoke set), and then
tries to extend a rim cycle to a full GP(n, k) labeling.  Any accept carries
an explicit witness: the parameters plus a relabeling that is re-validated by
rebuilding GP(n, k) and comparing edge sets.

Nine vertex counts admit GP members whose partition collapses to a single
part; those sizes are dispatched to the brute-force oracle instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .census import SigmaPartition, sigma_census
from .construct import GpLabeling, GpParams
from .errors import GraphError
from .graph import CubicGraph, is_connected, is_cycle_graph, is_two_regular

#: Vertex counts whose members can defeat the partition-based main path.
EXCEPTIONAL_VERTEX_COUNTS = frozenset({6, 8, 10, 16, 20, 24, 26, 48, 52})


class Reason(str, Enum):
    NOT_CUBIC = "NotCubic"
    ODD_ORDER = "OddOrder"
    DISCONNECTED = "Disconnected"
    NO_SIZE_N_PART = "NoSizeNPart"
    CANDIDATE_NOT_RIM = "CandidateNotRim"
    EXTEND_FAILED = "ExtendFailed"
    ORACLE_REJECTED = "OracleRejected"


@dataclass(frozen=True)
class RecognitionResult:
    """Accept with a verifiable witness, or reject with a machine-readable reason."""

    accepted: bool
    params: GpParams | None = None
    labeling: GpLabeling | None = None
    reason: Reason | None = None
    sigma_steps: int = 0

    @classmethod
    def accept(cls, params: GpParams, labeling: GpLabeling, sigma_steps: int = 0):
        return cls(accepted=True, params=params, labeling=labeling, sigma_steps=sigma_steps)

    @classmethod
    def reject(cls, reason: Reason, sigma_steps: int = 0):
        return cls(accepted=False, reason=reason, sigma_steps=sigma_steps)


def verify_mapping(g: CubicGraph, params, labeling: GpLabeling) -> bool:
    """True iff applying the labeling to GP(params) reproduces g exactly.

    ``params`` may be a GpParams or a raw (n, k) pair; invalid parameters
    verify as False.
    """
    try:
        p = params if isinstance(params, GpParams) else GpParams(*params)
    except GraphError:
        return False
    n, k = p.n, p.k
    if g.num_vertices != 2 * n:
        return False
    outer, inner = labeling.outer, labeling.inner
    if sorted(outer + inner) != list(range(2 * n)):
        return False
    mapped = set()
    for i in range(n):
        j = (i + 1) % n
        a, b = outer[i], outer[j]
        mapped.add((a, b) if a < b else (b, a))
        a, b = outer[i], inner[i]
        mapped.add((a, b) if a < b else (b, a))
        j = (i + k) % n
        a, b = inner[i], inner[j]
        mapped.add((a, b) if a < b else (b, a))
    return len(mapped) == len(g.edges) and mapped.issuperset(g.edges)


def extend(g: CubicGraph, u) -> RecognitionResult:
    """Try to grow a candidate rim vertex set into a full GP(n, k) witness.

    Accepts when u (or its complement, if u itself is not a single n-cycle)
    induces C_n, the off-rim neighbors form a perfect matching onto the
    remaining vertices, and some shift k makes every inner edge present.
    """
    if g.num_vertices % 2 != 0:
        return RecognitionResult.reject(Reason.ODD_ORDER)
    n = g.num_vertices // 2
    rim = set(u)
    if not (len(rim) == n and is_cycle_graph(g, rim)):
        complement = set(range(g.num_vertices)) - rim
        if len(rim) == n and is_cycle_graph(g, complement):
            rim = complement
        else:
            return RecognitionResult.reject(Reason.CANDIDATE_NOT_RIM)

    adjacency = g.adjacency
    in_rim = bytearray(g.num_vertices)
    for v in rim:
        in_rim[v] = 1

    # walk the rim cycle; deterministic start and direction
    start = min(rim)
    first = min(w for w in adjacency[start] if in_rim[w])
    order = [start, first]
    prev, cur = start, first
    while len(order) < n:
        a, b, c = adjacency[cur]
        if in_rim[a] and a != prev:
            nxt = a
        elif in_rim[b] and b != prev:
            nxt = b
        else:
            nxt = c
        order.append(nxt)
        prev, cur = cur, nxt

    # the unique off-rim neighbor of each rim vertex; must hit every
    # remaining vertex exactly once (spokes form a perfect matching)
    off = []
    for v in order:
        a, b, c = adjacency[v]
        if not in_rim[a]:
            off.append(a)
        elif not in_rim[b]:
            off.append(b)
        else:
            off.append(c)
    if len(set(off)) != n:
        return RecognitionResult.reject(Reason.EXTEND_FAILED)

    k = 0
    inner_neighbors = adjacency[off[0]]
    for j in range(1, n):
        if off[j] in inner_neighbors:
            k = j
            break
    if k == 0:
        return RecognitionResult.reject(Reason.EXTEND_FAILED)
    for i in range(n):
        if off[(i + k) % n] not in adjacency[off[i]]:
            return RecognitionResult.reject(Reason.EXTEND_FAILED)

    # rim, spoke and shifted-inner edges are pairwise distinct and all present,
    # so they account for every one of the 3n edges; recognize() re-validates
    # the witness independently on top of that
    k = min(k, n - k)
    try:
        params = GpParams(n, k)
    except GraphError:
        return RecognitionResult.reject(Reason.EXTEND_FAILED)
    labeling = GpLabeling(outer=tuple(order), inner=tuple(off))
    return RecognitionResult.accept(params, labeling)


def select_candidate_part(partition: SigmaPartition) -> tuple[int, frozenset[int]]:
    """Minimum-size part of the partition; ties broken by smallest sigma value."""
    return min(partition.parts.items(), key=lambda kv: (len(kv[1]), kv[0]))


def _largest_component_without_matching(g: CubicGraph, matching) -> set[int]:
    """Largest component of g minus a perfect matching (ties: smallest vertex).

    Equivalent to ``connected_components(g, without_edges=...)[0]`` but keyed
    on a partner array instead of an edge set.
    """
    partner = [-1] * g.num_vertices
    for a, b in matching:
        partner[a] = b
        partner[b] = a
    visited = bytearray(g.num_vertices)
    best: list[int] = []
    for start in range(g.num_vertices):
        if visited[start]:
            continue
        visited[start] = 1
        comp = [start]
        stack = [start]
        while stack:
            x = stack.pop()
            mate = partner[x]
            for y in g.adjacency[x]:
                if y != mate and not visited[y]:
                    visited[y] = 1
                    comp.append(y)
                    stack.append(y)
        if len(comp) > len(best):
            best = comp
    return set(best)


def main_recognize(g: CubicGraph) -> RecognitionResult:
    """Partition-driven recognition for non-exceptional vertex counts."""
    n = g.num_vertices // 2
    values, steps = sigma_census(g)
    partition = SigmaPartition.from_values(values)
    if not partition.parts:
        return RecognitionResult.reject(Reason.NO_SIZE_N_PART, steps)
    _, part = select_candidate_part(partition)
    if len(part) != n:
        return RecognitionResult.reject(Reason.NO_SIZE_N_PART, steps)

    part_edges = [g.edges[i] for i in part]
    degree_in_part: dict[int, int] = {}
    for a, b in part_edges:
        degree_in_part[a] = degree_in_part.get(a, 0) + 1
        degree_in_part[b] = degree_in_part.get(b, 0) + 1
    if max(degree_in_part.values()) == 1:
        # the part is a perfect matching (spokes); the rim is the largest
        # component left after deleting it
        candidate = _largest_component_without_matching(g, part_edges)
    else:
        candidate = set(degree_in_part)

    if not is_two_regular(g, candidate):
        return RecognitionResult.reject(Reason.CANDIDATE_NOT_RIM, steps)
    result = extend(g, candidate)
    return RecognitionResult(
        accepted=result.accepted,
        params=result.params,
        labeling=result.labeling,
        reason=result.reason,
        sigma_steps=steps,
    )


def recognize(g: CubicGraph) -> RecognitionResult:
    """Decide membership for any input, with full validation and a verified witness.

    Non-cubic, odd-order and disconnected inputs are rejected outright.
    Exceptional vertex counts fall back to the brute-force oracle; everything
    else runs the linear main path.  Accepts are re-validated before return.
    """
    for v in range(g.num_vertices):
        if len(g.adjacency[v]) != 3:
            return RecognitionResult.reject(Reason.NOT_CUBIC)
    if g.num_vertices % 2 != 0:
        return RecognitionResult.reject(Reason.ODD_ORDER)
    if not is_connected(g):
        return RecognitionResult.reject(Reason.DISCONNECTED)

    if g.num_vertices in EXCEPTIONAL_VERTEX_COUNTS:
        from .oracle import brute_force_recognize

        result = brute_force_recognize(g)
    else:
        result = main_recognize(g)

    if result.accepted and not verify_mapping(g, result.params, result.labeling):
        raise RuntimeError("accepted witness failed verification; recognition is unsound")
    return result

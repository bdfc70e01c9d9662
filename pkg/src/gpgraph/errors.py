"""Exception types raised by graph parsing, construction and analysis."""

from __future__ import annotations


class GraphError(Exception):
    """Base class for all input-validation and guard errors."""


class MalformedLineError(GraphError):
    def __init__(self, line_number: int, line: str):
        self.line_number = line_number
        self.line = line
        super().__init__(f"line {line_number}: expected two decimal vertex ids, got {line!r}")


class SelfLoopError(GraphError):
    def __init__(self, vertex: int, line_number: int | None = None):
        self.vertex = vertex
        self.line_number = line_number
        where = f" (line {line_number})" if line_number is not None else ""
        super().__init__(f"self-loop at vertex {vertex}{where}")


class DuplicateEdgeError(GraphError):
    def __init__(self, edge: tuple[int, int], line_number: int | None = None):
        self.edge = edge
        self.line_number = line_number
        where = f" (line {line_number})" if line_number is not None else ""
        super().__init__(f"duplicate edge {edge[0]} {edge[1]}{where}")


class NonContiguousIdsError(GraphError):
    def __init__(self, missing: int, max_seen: int):
        self.missing = missing
        self.max_seen = max_seen
        super().__init__(f"vertex ids must cover 0..{max_seen}; id {missing} never appears")


class NotCubicError(GraphError):
    def __init__(self, vertex: int, degree: int):
        self.vertex = vertex
        self.degree = degree
        super().__init__(f"vertex {vertex} has degree {degree}, expected 3")


class InvalidParamsError(GraphError):
    def __init__(self, n: int, k: int, why: str):
        self.n = n
        self.k = k
        super().__init__(f"invalid parameters (n={n}, k={k}): {why}")


class TooLargeError(GraphError):
    def __init__(self, num_vertices: int, limit: int):
        self.num_vertices = num_vertices
        self.limit = limit
        super().__init__(f"graph on {num_vertices} vertices exceeds the {limit}-vertex guard")


class SmallGraphError(GraphError):
    def __init__(self, n: int):
        self.n = n
        super().__init__(f"closed-form census prediction requires n > 40, got n={n}")

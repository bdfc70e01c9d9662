"""Linear-time recognition of generalized Petersen graphs.

The package builds GP(n, k) instances, classifies every edge of a cubic
graph by the number of 8-cycles through it, and uses the resulting edge
partition to recover (n, k) plus an explicit vertex relabeling, re-validated
against a rebuilt reference graph.  A brute-force oracle provides independent
ground truth and covers the few vertex counts the partition cannot separate.
"""

from .bench import BenchRecord, run_bench
from .census import (
    CYCLE_TYPES,
    LARGE_SIGMA_TRIPLES,
    CycleType,
    SigmaPartition,
    SigmaTriple,
    count_8cycles_through,
    enumerate_8cycles_through,
    predict_sigma,
    sigma_census,
    sigma_partition,
)
from .construct import GpLabeling, GpParams, build, enumerate_params, inner_cycle_structure
from .errors import (
    DuplicateEdgeError,
    GraphError,
    InvalidParamsError,
    MalformedLineError,
    NonContiguousIdsError,
    NotCubicError,
    SelfLoopError,
    SmallGraphError,
    TooLargeError,
)
from .graph import (
    CubicGraph,
    EdgeBall,
    connected_components,
    edge_ball,
    is_connected,
    is_cycle_graph,
    is_two_regular,
    parse_edge_list,
    serialize_edge_list,
)
from .oracle import (
    IsoWitness,
    brute_force_recognize,
    count_8cycles_global,
    enumerate_8cycles_global,
    random_cubic,
    two_edge_swap,
)
from .recognizer import (
    EXCEPTIONAL_VERTEX_COUNTS,
    Reason,
    RecognitionResult,
    extend,
    main_recognize,
    recognize,
    select_candidate_part,
    verify_mapping,
)

__version__ = "0.1.0"

__all__ = [
    "BenchRecord",
    "CYCLE_TYPES",
    "CubicGraph",
    "CycleType",
    "DuplicateEdgeError",
    "EXCEPTIONAL_VERTEX_COUNTS",
    "EdgeBall",
    "GpLabeling",
    "GpParams",
    "GraphError",
    "InvalidParamsError",
    "IsoWitness",
    "LARGE_SIGMA_TRIPLES",
    "MalformedLineError",
    "NonContiguousIdsError",
    "NotCubicError",
    "Reason",
    "RecognitionResult",
    "SelfLoopError",
    "SigmaPartition",
    "SigmaTriple",
    "SmallGraphError",
    "TooLargeError",
    "brute_force_recognize",
    "build",
    "connected_components",
    "count_8cycles_global",
    "count_8cycles_through",
    "edge_ball",
    "enumerate_8cycles_global",
    "enumerate_8cycles_through",
    "enumerate_params",
    "extend",
    "inner_cycle_structure",
    "is_connected",
    "is_cycle_graph",
    "is_two_regular",
    "main_recognize",
    "parse_edge_list",
    "predict_sigma",
    "random_cubic",
    "recognize",
    "run_bench",
    "select_candidate_part",
    "serialize_edge_list",
    "sigma_census",
    "sigma_partition",
    "two_edge_swap",
    "verify_mapping",
]

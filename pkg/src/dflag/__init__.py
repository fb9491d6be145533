"""Directed flag complexes: enumeration, Betti numbers, and persistence.

The package turns a finite digraph into its directed flag complex (the
complex of ordered cliques), counts cells, and computes homology and
persistent homology over prime fields, with an approximate mode that
carries certified error bounds.
"""

from .complexes import (
    CellCountReport,
    ComplexStore,
    build_store,
    count_cells,
    extension_set,
    for_each_simplex,
)
from .coboundary import CoboundaryMatrix, SparseColumn, build_matrix, cofaces, sort_columns
from .errors import (
    ConfigError,
    DuplicateEdgeError,
    GraphInputError,
    LoopError,
    ParseError,
    SizeLimitError,
    VertexRangeError,
)
from .field import PrimeField
from .filtration import FiltrationSpec, check_monotone, simplex_value
from .graph import (
    BitVector,
    DirectedGraph,
    dump_flag_file,
    intersect_all,
    load_edge_list,
    load_flag_file,
)
from .reduction import (
    HomologyReport,
    PersistencePair,
    ReductionQueue,
    ReductionResult,
    compute_homology,
    compute_persistence,
    reduce_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "BitVector",
    "CellCountReport",
    "CoboundaryMatrix",
    "ComplexStore",
    "ConfigError",
    "DirectedGraph",
    "DuplicateEdgeError",
    "FiltrationSpec",
    "GraphInputError",
    "HomologyReport",
    "LoopError",
    "ParseError",
    "PersistencePair",
    "PrimeField",
    "ReductionQueue",
    "ReductionResult",
    "SizeLimitError",
    "SparseColumn",
    "VertexRangeError",
    "build_matrix",
    "build_store",
    "check_monotone",
    "cofaces",
    "compute_homology",
    "compute_persistence",
    "count_cells",
    "dump_flag_file",
    "extension_set",
    "for_each_simplex",
    "intersect_all",
    "load_edge_list",
    "load_flag_file",
    "reduce_matrix",
    "simplex_value",
    "sort_columns",
]

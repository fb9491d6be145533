"""Sparse coboundary matrices of a filtered directed flag complex.

The column of a k-simplex lists its (k+1)-dimensional cofaces. A coface
arises by inserting one vertex into the ordered vertex list; inserting at
position p contributes the sign (-1)^p, matching the alternating-sum
boundary map read through the transpose.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import ComplexStore, Simplex, _check_simplex
from .field import PrimeField
from .filtration import FiltrationSpec
from .graph import DirectedGraph


def cofaces(g: DirectedGraph, s: Simplex) -> list[tuple[int, Simplex]]:
    """All (position, coface) pairs for one simplex.

    For insertion position p the candidate vertices are those with an edge
    from every vertex before p and to every vertex from p on; both sides
    are running bitset intersections. Output is ordered by ascending p,
    then ascending inserted vertex. Loops are excluded from the graph, so
    a candidate can never collide with a vertex already in s.
    """
    _check_simplex(g, s)
    k1 = len(s)
    full = (1 << g.n) - 1
    prefix_out = [full] * (k1 + 1)
    for i, v in enumerate(s):
        prefix_out[i + 1] = prefix_out[i] & g.out_rows[v].bits
    suffix_in = [full] * (k1 + 1)
    for i in range(k1 - 1, -1, -1):
        suffix_in[i] = suffix_in[i + 1] & g.in_rows[s[i]].bits

    result = []
    for p in range(k1 + 1):
        bits = prefix_out[p] & suffix_in[p]
        while bits:
            low = bits & -bits
            bits ^= low
            w = low.bit_length() - 1
            result.append((p, s[:p] + (w,) + s[p:]))
    return result


@dataclass
class SparseColumn:
    """One column: (row, coefficient) entries sorted by ascending row."""

    simplex_id: int
    filtration: float
    entries: list[tuple[int, int]]

    @property
    def nnz(self) -> int:
        return len(self.entries)

    @property
    def pivot_row(self) -> int:
        return self.entries[-1][0] if self.entries else -1

    @property
    def pivot_gap(self) -> int:
        """Distance from the pivot down to the next nonzero row.

        A single-entry column is the cheapest possible reducer, so its gap
        counts as if unbounded (pivot row + 1); an empty column gets 0.
        """
        if not self.entries:
            return 0
        if len(self.entries) == 1:
            return self.entries[-1][0] + 1
        return self.entries[-1][0] - self.entries[-2][0]


@dataclass
class CoboundaryMatrix:
    """All k-simplex columns plus the heuristic processing order."""

    dim: int
    modulus: int
    num_rows: int
    columns: list[SparseColumn]
    order: list[int]


def sort_columns(matrix_or_columns) -> list[int]:
    """Permutation of column indices in reduction-friendly order.

    Lexicographic on (filtration ascending, entry count ascending, pivot
    row descending, pivot gap descending), with ascending simplex id as
    the final tie-break so the permutation is total and repeatable.
    Ascending filtration along the result is what reduction relies on.
    Accepts a CoboundaryMatrix or a bare column list.
    """
    columns = getattr(matrix_or_columns, "columns", matrix_or_columns)

    def key(j):
        col = columns[j]
        return (col.filtration, col.nnz, -col.pivot_row, -col.pivot_gap, col.simplex_id)

    return sorted(range(len(columns)), key=key)


def build_matrix(
    g: DirectedGraph,
    store: ComplexStore,
    dim: int,
    spec: FiltrationSpec | None = None,
    field: PrimeField | None = None,
) -> CoboundaryMatrix:
    """Assemble the dimension-``dim`` coboundary matrix from the store.

    The store must hold dimensions dim and dim+1. Row ids are the store
    ids of the cofaces; a coface missing from the store means the store
    and the graph disagree, which is an internal error.
    """
    spec = spec or FiltrationSpec("zero")
    field = field or PrimeField(2)
    if not store.has_dim(dim) or not store.has_dim(dim + 1):
        raise ValueError(f"store lacks dimensions {dim} and {dim + 1}")
    simplices = store.simplices(dim)
    index = store.index(dim + 1)
    q = field.q

    columns = []
    for sid, s in enumerate(simplices):
        entries = []
        for p, coface in cofaces(g, s):
            try:
                row = index[coface]
            except KeyError:
                raise RuntimeError(
                    f"coface {coface} of {s} missing from the store"
                ) from None
            entries.append((row, 1 if p % 2 == 0 else q - 1))
        entries.sort()
        columns.append(SparseColumn(sid, spec.value(s, g), entries))
    matrix = CoboundaryMatrix(
        dim=dim,
        modulus=q,
        num_rows=store.count(dim + 1),
        columns=columns,
        order=[],
    )
    matrix.order = sort_columns(columns)
    return matrix

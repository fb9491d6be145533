"""Brute-force reference implementations for validating the fast paths.

Everything here recomputes results straight from the definitions with its
own simplex generation, its own face/sign bookkeeping, and dense Gaussian
elimination; none of the production enumeration, coboundary, or reduction
code is reused. That independence is the whole point: agreement between
the two routes on small inputs is the correctness evidence. Hard size
guards keep accidental combinatorial explosions out of test runs.
"""

from __future__ import annotations

import math
from itertools import permutations

import numpy as np

from .errors import SizeLimitError
from .graph import DirectedGraph

_MAX_VERTICES = 25
_MAX_BARCODE_CELLS = 2000


def _edge_set(g: DirectedGraph) -> set[tuple[int, int]]:
    return set(g.edges())


def oracle_enumerate(g: DirectedGraph, max_dim: int | None = None) -> set[tuple[int, ...]]:
    """Every simplex of dimension <= max_dim, straight from the definition.

    Level by level: a (d+1)-tuple is a simplex iff its length-d prefix is
    one and the last vertex receives an edge from each earlier vertex,
    checked one pair at a time against the edge set.
    """
    if g.n > _MAX_VERTICES:
        raise SizeLimitError(f"refusing brute-force enumeration for n = {g.n} > {_MAX_VERTICES}")
    edges = _edge_set(g)
    level: list[tuple[int, ...]] = [(v,) for v in range(g.n)]
    found: set[tuple[int, ...]] = set(level)
    d = 0
    while level and (max_dim is None or d < max_dim):
        nxt = []
        for s in level:
            for w in range(g.n):
                if w in s:
                    continue
                if all((v, w) in edges for v in s):
                    nxt.append(s + (w,))
        found.update(nxt)
        level = nxt
        d += 1
    return found


def oracle_enumerate_exhaustive(g: DirectedGraph, max_dim: int | None = None) -> set[tuple[int, ...]]:
    """Literal check of every ordered vertex tuple; tiny graphs only."""
    if g.n > 8:
        raise SizeLimitError("exhaustive tuple enumeration is limited to n <= 8")
    edges = _edge_set(g)
    top = g.n - 1 if max_dim is None else min(max_dim, g.n - 1)
    found: set[tuple[int, ...]] = set()
    for k in range(top + 1):
        for tup in permutations(range(g.n), k + 1):
            if all(
                (tup[i], tup[j]) in edges
                for i in range(k + 1)
                for j in range(i + 1, k + 1)
            ):
                found.add(tup)
    return found


def _by_dimension(simplices) -> dict[int, list[tuple[int, ...]]]:
    out: dict[int, list[tuple[int, ...]]] = {}
    for s in simplices:
        out.setdefault(len(s) - 1, []).append(s)
    for lst in out.values():
        lst.sort()
    return out


def oracle_counts(g: DirectedGraph, max_dim: int | None = None) -> list[int]:
    dims = _by_dimension(oracle_enumerate(g, max_dim))
    if not dims:
        return []
    return [len(dims.get(d, ())) for d in range(max(dims) + 1)]


def oracle_rank(matrix, q: int) -> int:
    """Rank over F_q by plain Gaussian elimination on a dense array."""
    a = np.array(matrix, dtype=np.int64) % q
    rows, cols = a.shape if a.ndim == 2 else (0, 0)
    rank = 0
    for c in range(cols):
        pivots = np.nonzero(a[rank:, c])[0]
        if pivots.size == 0:
            continue
        p = rank + int(pivots[0])
        if p != rank:
            a[[rank, p]] = a[[p, rank]]
        a[rank] = a[rank] * pow(int(a[rank, c]), -1, q) % q
        below = a[rank + 1 :, c]
        hot = np.nonzero(below)[0]
        if hot.size:
            a[rank + 1 + hot] = (a[rank + 1 + hot] - np.outer(below[hot], a[rank])) % q
        rank += 1
        if rank == rows:
            break
    return rank


def _boundary_matrix(faces: list, cells: list, q: int) -> np.ndarray:
    """Dense matrix of the alternating-sum boundary map, faces as rows."""
    index = {s: i for i, s in enumerate(faces)}
    d = np.zeros((len(faces), len(cells)), dtype=np.int64)
    for j, cell in enumerate(cells):
        for i in range(len(cell)):
            face = cell[:i] + cell[i + 1 :]
            sign = 1 if i % 2 == 0 else q - 1
            d[index[face], j] = (d[index[face], j] + sign) % q
    return d


def oracle_betti(g: DirectedGraph, max_dim: int | None = None, q: int = 2) -> list[int]:
    """Betti numbers from dense boundary-matrix ranks.

    betti_k = |X_k| - rank d_k - rank d_{k+1}, with d_0 and the map above
    the top dimension both zero.
    """
    dims = _by_dimension(oracle_enumerate(g, None if max_dim is None else max_dim + 1))
    if not dims:
        return []
    top = max(dims)
    report_top = top if max_dim is None else min(max_dim, top)
    rank = {0: 0}
    for k in range(1, top + 1):
        rank[k] = oracle_rank(_boundary_matrix(dims.get(k - 1, []), dims.get(k, []), q), q)
    rank[top + 1] = 0
    return [
        len(dims.get(k, ())) - rank[k] - rank[k + 1] for k in range(report_top + 1)
    ]


def _oracle_filtration_value(spec_algorithm, s, g) -> float:
    """Self-contained re-evaluation of the built-in filtration formulas."""
    if spec_algorithm == "zero":
        return 0.0
    vertex_part = None
    if g.vertex_weights is not None:
        vertex_part = max(g.vertex_weights[v] for v in s)
    edge_part = None
    if g.edge_weights is not None and len(s) > 1:
        edge_part = max(
            g.edge_weights[(s[i], s[j])]
            for i in range(len(s))
            for j in range(i + 1, len(s))
        )
    if spec_algorithm == "vertex-max":
        return vertex_part
    if spec_algorithm == "edge-max":
        if len(s) == 1:
            return vertex_part if vertex_part is not None else 0.0
        return edge_part
    candidates = [x for x in (vertex_part, edge_part) if x is not None]
    return max(candidates) if candidates else 0.0


def oracle_barcode(
    g: DirectedGraph,
    spec=None,
    max_dim: int | None = None,
    q: int = 2,
    include_zero: bool = False,
) -> list[tuple[int, float, float]]:
    """Standard persistence algorithm on the full boundary matrix.

    Cells are ordered by (filtration, dimension, vertex tuple); columns
    hold field coefficients and are reduced low-to-high. Returns (dim,
    birth, death) triples, death = inf for essential classes, zero-length
    bars dropped unless requested.
    """
    algorithm = spec.algorithm if spec is not None else "zero"
    enum_cap = None if max_dim is None else max_dim + 1
    dims = _by_dimension(oracle_enumerate(g, enum_cap))
    cells = [s for d in sorted(dims) for s in dims[d]]
    if len(cells) > _MAX_BARCODE_CELLS:
        raise SizeLimitError(
            f"refusing barcode on {len(cells)} cells > {_MAX_BARCODE_CELLS}"
        )
    values = {s: _oracle_filtration_value(algorithm, s, g) for s in cells}
    cells.sort(key=lambda s: (values[s], len(s), s))
    position = {s: i for i, s in enumerate(cells)}

    columns: list[dict[int, int]] = []
    for s in cells:
        col: dict[int, int] = {}
        if len(s) > 1:
            for i in range(len(s)):
                face = s[:i] + s[i + 1 :]
                col[position[face]] = 1 if i % 2 == 0 else q - 1
        columns.append(col)

    low_of: dict[int, int] = {}
    creators: list[int] = []
    for j, col in enumerate(columns):
        while col:
            low = max(col)
            other = low_of.get(low)
            if other is None:
                break
            factor = (q - col[low]) * pow(columns[other][low], -1, q) % q
            for r, c in columns[other].items():
                merged = (col.get(r, 0) + factor * c) % q
                if merged:
                    col[r] = merged
                else:
                    col.pop(r, None)
        if col:
            low_of[max(col)] = j
        else:
            creators.append(j)

    bars = []
    for low, j in low_of.items():
        birth_cell = cells[low]
        death_cell = cells[j]
        dim = len(birth_cell) - 1
        if max_dim is not None and dim > max_dim:
            continue
        birth, death = values[birth_cell], values[death_cell]
        if include_zero or birth != death:
            bars.append((dim, birth, death))
    paired = set(low_of)
    for j in creators:
        if j in paired:
            continue
        cell = cells[j]
        dim = len(cell) - 1
        if max_dim is not None and dim > max_dim:
            continue
        bars.append((dim, values[cell], math.inf))
    bars.sort()
    return bars

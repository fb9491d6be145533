"""Column reduction of coboundary matrices: Betti numbers, barcodes, and
the bounded-error approximate mode.

Ranks do not depend on the order in which columns are processed, so Betti
numbers are computed in the heuristic column order straight off the sorted
matrix. Persistence pairing does depend on order: it is only correct when
columns are consumed from the latest filtration group backwards and the
pivot priority follows the filtration of the row simplices. The barcode
path therefore relabels rows so that "largest row" means "earliest
coface", reuses the same kernel, and the output is pinned down by the
independent boundary-matrix oracle in the test suite.

Skipping a column in approximate mode perturbs the matrix rank by at most
one, and a skipped column is never used to reduce later ones, so the
reported Betti number in dimension k is off by at most the number of
columns skipped in this dimension's matrix plus the previous one's.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field as dataclass_field

from .coboundary import CoboundaryMatrix, SparseColumn, build_matrix
from .complexes import ComplexStore, build_store, collect_dims, count_cells
from .errors import ConfigError
from .field import PrimeField
from .filtration import FiltrationSpec, check_monotone


class ReductionQueue:
    """Working column during reduction: a max-row heap of (row, coeff).

    Rows may be pushed repeatedly; popping accumulates every contribution
    of the top row and silently drops rows whose coefficients cancel to
    zero. Past ``hash_threshold`` inserts the queue switches to tracking
    repeat rows in a dict so that heavily reduced columns stop paying the
    heap-bubbling cost; pop results are identical in both modes.
    """

    __slots__ = ("modulus", "_heap", "_overflow", "_inserts", "_threshold")

    def __init__(self, modulus: int, hash_threshold: int | None = 1024):
        self.modulus = modulus
        self._heap: list[tuple[int, int]] = []
        self._overflow: dict[int, int] = {}
        self._inserts = 0
        self._threshold = hash_threshold

    def push(self, row: int, coeff: int) -> None:
        coeff %= self.modulus
        self._inserts += 1
        if self._threshold is not None and self._inserts > self._threshold:
            if row in self._overflow:
                self._overflow[row] = (self._overflow[row] + coeff) % self.modulus
                return
            self._overflow[row] = 0
        heapq.heappush(self._heap, (-row, coeff))

    def pop_pivot(self) -> tuple[int, int] | None:
        """Largest remaining row with a nonzero accumulated coefficient."""
        heap = self._heap
        overflow = self._overflow
        while heap:
            negrow, total = heapq.heappop(heap)
            while heap and heap[0][0] == negrow:
                total += heapq.heappop(heap)[1]
            if overflow:
                total += overflow.pop(-negrow, 0)
            total %= self.modulus
            if total:
                return (-negrow, total)
        return None

    def drain(self) -> list[tuple[int, int]]:
        """Remaining accumulated entries, rows descending."""
        out = []
        while True:
            top = self.pop_pivot()
            if top is None:
                return out
            out.append(top)


@dataclass
class ReductionResult:
    pivot_map: dict[int, int]
    pairs: list[tuple[int, int]]
    zero_columns: list[int]
    skipped: list[int]

    @property
    def rank(self) -> int:
        return len(self.pairs)


def _reduce_columns(columns, order, field, approx_limit, queue_threshold) -> ReductionResult:
    """Left-to-right reduction of ``columns`` along ``order`` over F_q.

    Registered reducers are stored pivot-normalized and without their pivot
    entry, so one addition step pushes only the sub-pivot rows. A column is
    abandoned once it would need its approx_limit-th addition.
    """
    q = field.q
    inv = field.inv
    reducers: dict[int, list[tuple[int, int]]] = {}
    pivot_map: dict[int, int] = {}
    pairs: list[tuple[int, int]] = []
    zero_columns: list[int] = []
    skipped: list[int] = []
    allowed = None if approx_limit is None else approx_limit - 1

    for j in order:
        col = columns[j]
        sid = col.simplex_id
        entries = col.entries
        if not entries:
            zero_columns.append(sid)
            continue
        row, coeff = entries[-1]
        if row not in reducers:
            scale = inv[coeff]
            rest = entries[:-1]
            if scale != 1:
                rest = [(r, c * scale % q) for r, c in rest]
            reducers[row] = rest
            pivot_map[row] = sid
            pairs.append((sid, row))
            continue

        queue = ReductionQueue(q, hash_threshold=queue_threshold)
        for r, c in entries:
            queue.push(r, c)
        additions = 0
        while True:
            top = queue.pop_pivot()
            if top is None:
                zero_columns.append(sid)
                break
            row, coeff = top
            reducer = reducers.get(row)
            if reducer is None:
                rest = queue.drain()
                scale = inv[coeff]
                if scale != 1:
                    rest = [(r, c * scale % q) for r, c in rest]
                reducers[row] = rest
                pivot_map[row] = sid
                pairs.append((sid, row))
                break
            if allowed is not None and additions >= allowed:
                skipped.append(sid)
                break
            # popped pivot cancels against the implicit unit pivot of the
            # reducer, so only the sub-pivot rows go back into the queue
            factor = q - coeff
            for r, c in reducer:
                queue.push(r, c * factor % q)
            additions += 1
    return ReductionResult(pivot_map, pairs, zero_columns, skipped)


def reduce_matrix(
    matrix: CoboundaryMatrix,
    field: PrimeField | None = None,
    approx_limit: int | None = None,
    queue_threshold: int | None = 1024,
) -> ReductionResult:
    """Reduce a sorted coboundary matrix in its stored column order.

    ``approx_limit`` bounds the addition steps spent on any one column;
    None reduces exactly. The matrix order must be a permutation with
    non-decreasing filtration values, otherwise the result is meaningless
    and a ValueError is raised.
    """
    field = field or PrimeField(matrix.modulus)
    if field.q != matrix.modulus:
        raise ValueError(f"field modulus {field.q} != matrix modulus {matrix.modulus}")
    if approx_limit is not None and approx_limit < 1:
        raise ConfigError("approx_limit must be a positive integer or None")
    order = matrix.order
    if sorted(order) != list(range(len(matrix.columns))):
        raise ValueError("matrix order is not a permutation of its columns")
    previous = -math.inf
    for j in order:
        value = matrix.columns[j].filtration
        if value < previous:
            raise ValueError("matrix columns are not sorted by filtration")
        previous = value
    return _reduce_columns(matrix.columns, order, field, approx_limit, queue_threshold)


@dataclass(frozen=True)
class PersistencePair:
    """One bar: a class of dimension ``dim`` alive on [birth, death)."""

    dim: int
    birth: float
    death: float

    @property
    def is_infinite(self) -> bool:
        return self.death == math.inf

    @property
    def length(self) -> float:
        return self.death - self.birth


@dataclass
class HomologyReport:
    """Per-dimension Betti counts with approximation accounting and bars.

    ``skipped[k]`` counts columns abandoned in the dimension-k coboundary
    matrix; ``error_bounds[k]`` is the certified bound on the Betti error,
    the skipped totals of the dimension k-1 and k matrices. ``pairs``
    keeps every recorded bar including zero-length ones; ``bars`` filters.
    """

    modulus: int
    min_dim: int
    max_dim: int
    cell_counts: dict[int, int]
    betti: dict[int, int]
    skipped: dict[int, int]
    error_bounds: dict[int, int]
    pairs: list[PersistencePair] = dataclass_field(default_factory=list)

    def bars(self, dim: int | None = None, include_zero: bool = False) -> list[PersistencePair]:
        out = [
            p
            for p in self.pairs
            if (dim is None or p.dim == dim) and (include_zero or p.birth != p.death)
        ]
        return sorted(out, key=lambda p: (p.dim, p.birth, p.death))

    @property
    def euler_characteristic(self) -> int:
        return sum(c if d % 2 == 0 else -c for d, c in self.cell_counts.items())

    @property
    def betti_alternating_sum(self) -> int:
        return sum(b if d % 2 == 0 else -b for d, b in self.betti.items())


def _validate_run(g, spec, min_dim, max_dim, approx_limit):
    if min_dim < 0:
        raise ConfigError("min_dim must be >= 0")
    if max_dim is not None and max_dim < min_dim:
        raise ConfigError("max_dim must be >= min_dim")
    if approx_limit is not None and approx_limit < 1:
        raise ConfigError("approx_limit must be a positive integer or None")
    spec.validate(g)
    if spec.provably_monotone():
        return
    if type(spec) is FiltrationSpec and spec.algorithm == "edge-max":
        # monotonicity can only fail between a vertex and an edge here:
        # higher faces take maxima over growing edge subsets
        vw = g.vertex_weights
        for (u, v), w in g.edge_weights.items():
            base = max(vw[u], vw[v]) if vw is not None else 0.0
            if base > w:
                raise ConfigError(
                    f"edge-max filtration is not monotone: edge ({u}, {v}) has "
                    f"weight {w} below a vertex value {base}"
                )
        return
    if not check_monotone(spec, g, max_dim=None if max_dim is None else max_dim + 1):
        raise ConfigError("filtration is not monotone")


def _dimension_slices(g, k_start, top, threads, in_memory):
    """Yield (k, store) with the store holding dimensions k and k+1.

    The in-memory regime builds the whole complex once; the streaming
    regime re-enumerates per dimension and never holds more than two
    dimensions, trading walks of the prefix tree for memory.
    """
    if in_memory:
        store = build_store(g, max_dim=top + 1, threads=threads)
        for k in range(k_start, top + 1):
            yield k, store
    else:
        for k in range(k_start, top + 1):
            dims = collect_dims(g, (k, k + 1), k + 1, threads=threads)
            partial = {k: dims.get(k, []), k + 1: dims.get(k + 1, [])}
            yield k, ComplexStore(partial)


def _resolve_top(g, max_dim, threads) -> int:
    if max_dim is not None:
        return max_dim
    return count_cells(g, threads=threads).top_dim


def _empty_report(modulus, min_dim) -> HomologyReport:
    return HomologyReport(modulus, min_dim, -1, {}, {}, {}, {}, [])


def compute_homology(
    g,
    spec: FiltrationSpec | None = None,
    max_dim: int | None = None,
    min_dim: int = 0,
    modulus: int = 2,
    approx_limit: int | None = None,
    threads: int = 1,
    in_memory: bool = False,
    queue_threshold: int | None = 1024,
) -> HomologyReport:
    """Betti numbers of the directed flag complex, per dimension.

    The dimension-k count is the number of k-simplices minus the ranks of
    the coboundary matrices of dimensions k and k-1. Matrices are reduced
    in the heuristic sorted order; with a finite ``approx_limit`` the
    reported numbers come with certified error bounds in the result.
    """
    spec = spec or FiltrationSpec("zero")
    field = PrimeField(modulus)
    _validate_run(g, spec, min_dim, max_dim, approx_limit)
    top = _resolve_top(g, max_dim, threads)
    if top < 0:
        return _empty_report(modulus, min_dim)

    k_start = max(min_dim - 1, 0)
    counts: dict[int, int] = {}
    ranks: dict[int, int] = {}
    skipped: dict[int, int] = {}
    for k, store in _dimension_slices(g, k_start, top, threads, in_memory):
        counts[k] = store.count(k)
        matrix = build_matrix(g, store, k, spec, field)
        result = reduce_matrix(matrix, field, approx_limit, queue_threshold)
        ranks[k] = result.rank
        skipped[k] = len(result.skipped)

    betti = {}
    errors = {}
    for k in range(min_dim, top + 1):
        betti[k] = counts[k] - ranks[k] - ranks.get(k - 1, 0)
        errors[k] = skipped.get(k - 1, 0) + skipped[k]
    pairs = []
    if type(spec) is FiltrationSpec and spec.algorithm == "zero":
        for k in range(min_dim, top + 1):
            pairs.extend([PersistencePair(k, 0.0, math.inf)] * betti[k])
    report_counts = {k: counts[k] for k in range(min_dim, top + 1)}
    report_skipped = {k: skipped[k] for k in range(min_dim, top + 1)}
    return HomologyReport(
        modulus, min_dim, top, report_counts, betti, report_skipped, errors, pairs
    )


def _persistence_layout(matrix, row_filtration):
    """Row relabeling and column order for barcode-correct reduction.

    Rows are renumbered so that the largest row index is the earliest
    (filtration, id) coface; columns are consumed from the latest
    filtration group backwards. Together with the same convention one
    dimension down this realizes one global filtration-compatible order,
    which is what makes the pairing agree with the boundary-matrix
    algorithm.
    """
    num_rows = len(row_filtration)
    asc_rows = sorted(range(num_rows), key=lambda i: (row_filtration[i], i))
    rowmap = [0] * num_rows
    for pos, orig in enumerate(asc_rows):
        rowmap[orig] = num_rows - 1 - pos
    remapped = []
    for col in matrix.columns:
        entries = sorted((rowmap[r], c) for r, c in col.entries)
        remapped.append(SparseColumn(col.simplex_id, col.filtration, entries))
    asc_cols = sorted(
        range(len(matrix.columns)), key=lambda j: (matrix.columns[j].filtration, j)
    )
    return remapped, asc_cols[::-1], asc_rows


def compute_persistence(
    g,
    spec: FiltrationSpec | None = None,
    max_dim: int | None = None,
    min_dim: int = 0,
    modulus: int = 2,
    approx_limit: int | None = None,
    threads: int = 1,
    in_memory: bool = False,
    queue_threshold: int | None = 1024,
) -> HomologyReport:
    """Persistence barcode of the filtered directed flag complex.

    A registered pivot pairs a k-simplex birth with a (k+1)-simplex death
    and yields the bar [f(birth), f(death)); a k-column that reduces to
    zero without being a death one dimension down yields [f, infinity).
    Zero-length bars are kept in ``pairs`` and hidden by ``bars()``.
    """
    spec = spec or FiltrationSpec("zero")
    field = PrimeField(modulus)
    _validate_run(g, spec, min_dim, max_dim, approx_limit)
    top = _resolve_top(g, max_dim, threads)
    if top < 0:
        return _empty_report(modulus, min_dim)

    k_start = max(min_dim - 1, 0)
    counts: dict[int, int] = {}
    ranks: dict[int, int] = {}
    skipped: dict[int, int] = {}
    pairs: list[PersistencePair] = []
    killed_here: set[int] = set()
    for k, store in _dimension_slices(g, k_start, top, threads, in_memory):
        counts[k] = store.count(k)
        matrix = build_matrix(g, store, k, spec, field)
        row_filtration = [spec.value(t, g) for t in store.simplices(k + 1)]
        columns, order, asc_rows = _persistence_layout(matrix, row_filtration)
        result = _reduce_columns(columns, order, field, approx_limit, queue_threshold)
        ranks[k] = result.rank
        skipped[k] = len(result.skipped)

        num_rows = matrix.num_rows
        killed_next: set[int] = set()
        for sid, row in result.pairs:
            tau = asc_rows[num_rows - 1 - row]
            killed_next.add(tau)
            if k >= min_dim:
                birth = matrix.columns[sid].filtration
                death = row_filtration[tau]
                pairs.append(PersistencePair(k, birth, death))
        if k >= min_dim:
            for sid in result.zero_columns:
                if sid not in killed_here:
                    pairs.append(
                        PersistencePair(k, matrix.columns[sid].filtration, math.inf)
                    )
        killed_here = killed_next

    betti = {}
    errors = {}
    for k in range(min_dim, top + 1):
        betti[k] = counts[k] - ranks[k] - ranks.get(k - 1, 0)
        errors[k] = skipped.get(k - 1, 0) + skipped[k]
    pairs.sort(key=lambda p: (p.dim, p.birth, p.death))
    report_counts = {k: counts[k] for k in range(min_dim, top + 1)}
    report_skipped = {k: skipped[k] for k in range(min_dim, top + 1)}
    return HomologyReport(
        modulus, min_dim, top, report_counts, betti, report_skipped, errors, pairs
    )

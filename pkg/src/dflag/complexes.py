"""On-the-fly enumeration of the simplices of a directed flag complex.

A k-simplex is an ordered (k+1)-clique (v0, ..., vk): an edge runs from
v_i to v_j for every i < j. Enumeration walks the prefix tree of cliques
with a fixed initial vertex; the set of vertices extending a prefix is the
AND of the out-rows of its vertices, so a branch dies as soon as that
intersection is empty. Only the graph itself is ever held in memory.
"""

from __future__ import annotations

import hashlib
import json
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .errors import ConfigError
from .graph import BitVector, DirectedGraph

Simplex = tuple[int, ...]


def _check_simplex(g: DirectedGraph, s: Simplex) -> None:
    if len(s) == 0:
        raise ValueError("empty vertex tuple is not a simplex")
    if len(set(s)) != len(s):
        raise ValueError(f"repeated vertex in {s}")
    for i, v in enumerate(s):
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range [0, {g.n})")
        for w in s[i + 1 :]:
            if not g.has_edge(v, w):
                raise ValueError(f"{s} is not a simplex: missing edge ({v}, {w})")


def extension_set(g: DirectedGraph, s: Simplex) -> BitVector:
    """Vertices w such that appending w to s gives another simplex.

    This is the intersection of the out-neighbourhoods of all vertices
    of s, computed with bitwise ANDs.
    """
    _check_simplex(g, s)
    bits = g.out_rows[s[0]].bits
    for v in s[1:]:
        bits &= g.out_rows[v].bits
    return BitVector(g.n, bits)


def _descend(simplex, ext, out_bits, visitor, max_dim, dim):
    # ext is the full extension set of `simplex`; children come off it in
    # ascending vertex order, each child keeping ext AND its own out-row.
    bits = ext
    while bits:
        low = bits & -bits
        bits ^= low
        w = low.bit_length() - 1
        child = simplex + (w,)
        if visitor(child):
            return True
        if max_dim is None or dim < max_dim:
            child_ext = ext & out_bits[w]
            if child_ext and _descend(child, child_ext, out_bits, visitor, max_dim, dim + 1):
                return True
    return False


def for_each_simplex(g, visitor, max_dim=None, part=None) -> bool:
    """Invoke visitor exactly once per simplex of dimension <= max_dim.

    Visits simplices whose initial vertex lies in ``part`` (default: every
    vertex, ascending). Within one initial vertex the order is depth-first
    with children in ascending vertex id. A truthy return value from the
    visitor aborts the walk; the abort is propagated as the return value.
    """
    out_bits = [row.bits for row in g.out_rows]
    roots = range(g.n) if part is None else sorted(set(part))
    for v in roots:
        if not 0 <= v < g.n:
            raise ValueError(f"initial vertex {v} out of range [0, {g.n})")
        if _walk_root(out_bits, v, visitor, max_dim):
            return True
    return False


@dataclass(frozen=True)
class CellCountReport:
    """Number of simplices per dimension, dimension 0 first."""

    counts: list[int]

    @property
    def euler_characteristic(self) -> int:
        return sum(c if d % 2 == 0 else -c for d, c in enumerate(self.counts))

    @property
    def top_dim(self) -> int:
        return len(self.counts) - 1


class ComplexStore:
    """In-memory complex: per-dimension simplex lists plus reverse indices.

    Ids within a dimension are consecutive from 0 in enumeration order
    (initial vertices ascending, then depth-first), so they are identical
    no matter how the enumeration work was split up.
    """

    def __init__(self, dims: dict[int, list[Simplex]]):
        self._dims = dims
        self._index = {d: {s: i for i, s in enumerate(lst)} for d, lst in dims.items()}

    def has_dim(self, d: int) -> bool:
        return d in self._dims

    def simplices(self, d: int) -> list[Simplex]:
        return self._dims.get(d, [])

    def count(self, d: int) -> int:
        return len(self._dims.get(d, ()))

    def id_of(self, s: Simplex) -> int:
        return self._index[len(s) - 1][s]

    def index(self, d: int) -> dict[Simplex, int]:
        return self._index.get(d, {})

    @property
    def top_dim(self) -> int:
        populated = [d for d, lst in self._dims.items() if lst]
        return max(populated) if populated else -1


def _graph_digest(g: DirectedGraph) -> str:
    nbytes = (g.n + 7) // 8
    payload = b"".join(row.bits.to_bytes(nbytes, "little") for row in g.out_rows)
    return hashlib.sha1(str(g.n).encode() + payload).hexdigest()


class _Checkpoint:
    """JSON-lines file of per-initial-vertex partial counts.

    First record pins the graph digest and dimension cap so a resumed run
    cannot silently mix results from different inputs.
    """

    def __init__(self, path, g, max_dim):
        self.path = path
        self.meta = {"n": g.n, "max_dim": max_dim, "digest": _graph_digest(g)}
        self._lock = threading.Lock()

    def load(self) -> dict[int, list[int]]:
        done: dict[int, list[int]] = {}
        try:
            with open(self.path, "r", encoding="utf-8") as fh:
                lines = fh.read().splitlines()
        except FileNotFoundError:
            with open(self.path, "w", encoding="utf-8") as fh:
                fh.write(json.dumps({"meta": self.meta}) + "\n")
            return done
        torn = False
        for raw in lines:
            try:
                record = json.loads(raw)
            except json.JSONDecodeError:
                torn = True  # a killed run may leave a half-written line
                continue
            if "meta" in record:
                if record["meta"] != self.meta:
                    raise ConfigError(
                        "checkpoint was written for a different graph or dimension cap"
                    )
            else:
                done[record["v"]] = record["counts"]
        if torn or not lines:
            # rewrite so new appends cannot glue onto a torn line
            with open(self.path, "w", encoding="utf-8") as fh:
                fh.write(json.dumps({"meta": self.meta}) + "\n")
                for v in sorted(done):
                    fh.write(json.dumps({"v": v, "counts": done[v]}) + "\n")
        return done

    def record(self, v: int, counts: list[int]) -> None:
        with self._lock:
            with open(self.path, "a", encoding="utf-8") as fh:
                fh.write(json.dumps({"v": v, "counts": counts}) + "\n")
                fh.flush()


def _walk_root(out_bits, v, visitor, max_dim) -> bool:
    if visitor((v,)):
        return True
    if max_dim is None or max_dim > 0:
        ext = out_bits[v]
        if ext and _descend((v,), ext, out_bits, visitor, max_dim, 1):
            return True
    return False


def _count_from(out_bits, v, max_dim) -> list[int]:
    local: list[int] = []

    def visit(s):
        d = len(s) - 1
        if d >= len(local):
            local.extend([0] * (d + 1 - len(local)))
        local[d] += 1

    _walk_root(out_bits, v, visit, max_dim)
    return local


def _run_per_vertex(g, vertices, worker, threads):
    """Dynamic work queue over initial vertices; results keyed by vertex."""
    if threads <= 1:
        return {v: worker(v) for v in vertices}
    results = {}
    with ThreadPoolExecutor(max_workers=threads) as pool:
        for v, result in zip(vertices, pool.map(worker, vertices)):
            results[v] = result
    return results


def count_cells(g, max_dim=None, threads=1, checkpoint=None) -> CellCountReport:
    """Count simplices per dimension by initial-vertex partition.

    Per-vertex subtotals are summed, so the merge is independent of worker
    scheduling. With ``checkpoint`` set, finished vertices are appended to
    that file and skipped on the next run.
    """
    ck = _Checkpoint(checkpoint, g, max_dim) if checkpoint else None
    done = ck.load() if ck else {}
    pending = [v for v in range(g.n) if v not in done]
    out_bits = [row.bits for row in g.out_rows]

    def worker(v):
        counts = _count_from(out_bits, v, max_dim)
        if ck:
            ck.record(v, counts)
        return counts

    fresh = _run_per_vertex(g, pending, worker, threads)
    totals: list[int] = []
    for v in range(g.n):
        counts = done.get(v) or fresh.get(v) or []
        if len(counts) > len(totals):
            totals.extend([0] * (len(counts) - len(totals)))
        for d, c in enumerate(counts):
            totals[d] += c
    return CellCountReport(totals)


def collect_dims(g, wanted, max_dim, threads=1) -> dict[int, list[Simplex]]:
    """Gather the simplices of the requested dimensions in enumeration order.

    ``wanted=None`` keeps every dimension up to max_dim. Per-vertex pieces
    are concatenated in ascending initial-vertex order, so the result does
    not depend on the thread count.
    """
    keep = None if wanted is None else set(wanted)
    out_bits = [row.bits for row in g.out_rows]

    def worker(v):
        local: dict[int, list[Simplex]] = {}

        def visit(s):
            d = len(s) - 1
            if keep is None or d in keep:
                local.setdefault(d, []).append(s)

        _walk_root(out_bits, v, visit, max_dim)
        return local

    pieces = _run_per_vertex(g, list(range(g.n)), worker, threads)
    merged: dict[int, list[Simplex]] = {}
    for v in range(g.n):
        for d, lst in pieces[v].items():
            merged.setdefault(d, []).extend(lst)
    return merged


def build_store(g, max_dim=None, threads=1) -> ComplexStore:
    """Materialize the complex up to max_dim with per-dimension ids.

    An unbounded build also records the first empty dimension, so the top
    dimension's coboundary matrix can be assembled from the store.
    """
    dims = collect_dims(g, None, max_dim, threads=threads)
    if max_dim is not None:
        cap = max_dim
    else:
        cap = max(dims, default=-1) + 1
    for d in range(cap + 1):
        dims.setdefault(d, [])
    return ComplexStore(dims)

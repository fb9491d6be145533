"""Directed graphs as paired bitset adjacency matrices, plus text ingestion.

A graph stores one bitset row per vertex for outgoing edges and one for
incoming edges (the transpose). Keeping both lets set intersections run as
single integer AND operations in either direction.
"""

from __future__ import annotations

import math
from functools import reduce
from typing import Iterable, Iterator

from .errors import (
    DuplicateEdgeError,
    LoopError,
    ParseError,
    VertexRangeError,
)


class BitVector:
    """Fixed-length vector of bits backed by one arbitrary-precision int.

    Bit ``i`` is set iff index ``i`` is a member. Bits at positions at or
    beyond ``length`` are always zero.
    """

    __slots__ = ("length", "bits")

    def __init__(self, length: int, bits: int = 0):
        if length < 0:
            raise ValueError("length must be non-negative")
        if bits < 0 or bits >> length:
            raise ValueError("bits outside declared length")
        self.length = length
        self.bits = bits

    @classmethod
    def from_indices(cls, length: int, indices: Iterable[int]) -> "BitVector":
        bits = 0
        for i in indices:
            if not 0 <= i < length:
                raise IndexError(f"bit index {i} out of range [0, {length})")
            bits |= 1 << i
        return cls(length, bits)

    def get(self, i: int) -> bool:
        if not 0 <= i < self.length:
            raise IndexError(f"bit index {i} out of range [0, {self.length})")
        return bool((self.bits >> i) & 1)

    def set(self, i: int) -> None:
        if not 0 <= i < self.length:
            raise IndexError(f"bit index {i} out of range [0, {self.length})")
        self.bits |= 1 << i

    def count(self) -> int:
        return self.bits.bit_count()

    def ones(self) -> Iterator[int]:
        """Indices of set bits, ascending."""
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def complement(self) -> "BitVector":
        mask = (1 << self.length) - 1
        return BitVector(self.length, ~self.bits & mask)

    def _check_same_length(self, other: "BitVector") -> None:
        if self.length != other.length:
            raise ValueError(
                f"length mismatch: {self.length} vs {other.length}"
            )

    def __and__(self, other: "BitVector") -> "BitVector":
        self._check_same_length(other)
        return BitVector(self.length, self.bits & other.bits)

    def __or__(self, other: "BitVector") -> "BitVector":
        self._check_same_length(other)
        return BitVector(self.length, self.bits | other.bits)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BitVector):
            return NotImplemented
        return self.length == other.length and self.bits == other.bits

    def __len__(self) -> int:
        return self.length

    def __repr__(self) -> str:
        shown = "".join("1" if self.get(i) else "0" for i in range(self.length))
        return f"BitVector({self.length}, 0b{shown[::-1] or '0'})"


def intersect_all(rows: list[BitVector]) -> BitVector:
    """AND together a non-empty list of equal-length bit vectors."""
    if not rows:
        raise ValueError("intersect_all needs at least one row")
    first = rows[0]
    for row in rows[1:]:
        first._check_same_length(row)
    bits = reduce(lambda a, b: a & b.bits, rows[1:], first.bits)
    return BitVector(first.length, bits)


class DirectedGraph:
    """Finite loopless digraph over vertices 0..n-1.

    ``out_rows[v]`` has bit w set iff the edge (v, w) exists; ``in_rows`` is
    the transpose. Optional ``vertex_weights`` is a list of n floats and
    ``edge_weights`` maps (v, w) to a float for every edge. Instances are
    treated as immutable once built; concurrent readers need no locking.
    """

    __slots__ = ("n", "out_rows", "in_rows", "vertex_weights", "edge_weights")

    def __init__(self, n, out_rows, in_rows, vertex_weights=None, edge_weights=None):
        self.n = n
        self.out_rows = out_rows
        self.in_rows = in_rows
        self.vertex_weights = vertex_weights
        self.edge_weights = edge_weights

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        vertex_weights: list[float] | None = None,
        edge_weights: dict[tuple[int, int], float] | None = None,
    ) -> "DirectedGraph":
        out_rows = [BitVector(n) for _ in range(n)]
        in_rows = [BitVector(n) for _ in range(n)]
        for v, w in edges:
            if not (0 <= v < n and 0 <= w < n):
                raise VertexRangeError(f"edge ({v}, {w}) outside vertex range [0, {n})")
            if v == w:
                raise LoopError(f"loop edge ({v}, {v})")
            if out_rows[v].get(w):
                raise DuplicateEdgeError(f"duplicate edge ({v}, {w})")
            out_rows[v].set(w)
            in_rows[w].set(v)
        if vertex_weights is not None and len(vertex_weights) != n:
            raise ValueError("vertex_weights length must equal n")
        if edge_weights is not None:
            for v, w in edge_weights:
                if not out_rows[v].get(w):
                    raise ValueError(f"edge weight given for missing edge ({v}, {w})")
            if len(edge_weights) != sum(r.count() for r in out_rows):
                raise ValueError("edge_weights must cover exactly the edge set")
        return cls(n, out_rows, in_rows, vertex_weights, edge_weights)

    def has_edge(self, v: int, w: int) -> bool:
        return (self.out_rows[v].bits >> w) & 1 == 1

    def edges(self) -> Iterator[tuple[int, int]]:
        for v in range(self.n):
            for w in self.out_rows[v].ones():
                yield (v, w)

    @property
    def num_edges(self) -> int:
        return sum(row.count() for row in self.out_rows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DirectedGraph):
            return NotImplemented
        return (
            self.n == other.n
            and self.out_rows == other.out_rows
            and self.vertex_weights == other.vertex_weights
            and self.edge_weights == other.edge_weights
        )

    def __repr__(self) -> str:
        return f"DirectedGraph(n={self.n}, edges={self.num_edges})"


def _input_lines(source) -> Iterator[tuple[int, str]]:
    """Yield (1-based line number, payload) pairs, dropping comments.

    Accepts a string or any iterable of lines; LF and CRLF both work.
    '#' starts a comment that runs to the end of the line.
    """
    lines = source.splitlines() if isinstance(source, str) else source
    for number, raw in enumerate(lines, start=1):
        text = raw.split("#", 1)[0].strip()
        if text:
            yield number, text


def _parse_weight(token: str, line: int) -> float:
    try:
        value = float(token)
    except ValueError:
        raise ParseError(f"invalid weight {token!r}", line) from None
    if not math.isfinite(value):
        raise ParseError(f"non-finite weight {token!r}", line)
    return value


def _parse_vertex(token: str, line: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise ParseError(f"invalid vertex id {token!r}", line) from None
    if value < 0:
        raise ParseError(f"negative vertex id {value}", line)
    return value


def _assemble(n, raw_edges, directed):
    """Turn parsed (line, u, v, weight-or-None) records into a graph.

    In undirected mode each unordered pair is oriented low id to high id.
    The same pair may appear once per orientation (symmetric-matrix dumps do
    this) as long as any weights agree; repeating an orientation is an error.
    """
    seen: dict[tuple[int, int], tuple[int, float | None, bool]] = {}
    weighted = 0
    for line, u, v, weight in raw_edges:
        if u >= n or v >= n:
            raise VertexRangeError(f"vertex id {max(u, v)} >= vertex count {n}", line)
        if u == v:
            raise LoopError(f"loop edge ({u}, {u})", line)
        if weight is not None:
            weighted += 1
        key = (u, v) if directed else (min(u, v), max(u, v))
        if key in seen:
            _, old_weight, old_forward = seen[key]
            forward = key == (u, v)
            if directed or forward == old_forward:
                raise DuplicateEdgeError(f"duplicate edge ({u}, {v})", line)
            if old_weight != weight:
                raise DuplicateEdgeError(
                    f"edge ({u}, {v}) repeats its reverse with a different weight",
                    line,
                )
            continue
        seen[key] = (line, weight, key == (u, v))
    if weighted and weighted != len(raw_edges):
        raise ParseError(
            "some edges carry weights and others do not; weight all or none",
            line=raw_edges[-1][0],
        )
    edges = sorted(seen)
    edge_weights = None
    if weighted:
        edge_weights = {e: seen[e][1] for e in edges}
    return edges, edge_weights


def load_flag_file(source, directed: bool = True) -> DirectedGraph:
    """Parse the .flag text format.

    The format is line oriented with '#' comments:

        dim 0
        <n whitespace-separated vertex filtration values, 0 when unweighted>
        dim 1
        <one line per edge: "source target [weight]">

    The "dim 1" section may be absent for an edgeless graph. Raises a
    GraphInputError subclass, with the offending line number, for malformed
    lines, out-of-range vertices, duplicate edges, and loops.
    """
    lines = list(_input_lines(source))
    if not lines or lines[0][1].split() != ["dim", "0"]:
        line = lines[0][0] if lines else 1
        raise ParseError("expected 'dim 0' header", line)
    if len(lines) < 2:
        raise ParseError("missing vertex value line after 'dim 0'", lines[0][0])
    vline, vtext = lines[1]
    vertex_weights = [_parse_weight(tok, vline) for tok in vtext.split()]
    n = len(vertex_weights)

    raw_edges = []
    rest = lines[2:]
    if rest:
        eline, etext = rest[0]
        if etext.split() != ["dim", "1"]:
            raise ParseError("expected 'dim 1' header", eline)
        for line, text in rest[1:]:
            tokens = text.split()
            if len(tokens) not in (2, 3):
                raise ParseError(
                    f"expected 'source target [weight]', got {text!r}", line
                )
            u = _parse_vertex(tokens[0], line)
            v = _parse_vertex(tokens[1], line)
            weight = _parse_weight(tokens[2], line) if len(tokens) == 3 else None
            raw_edges.append((line, u, v, weight))
    edges, edge_weights = _assemble(n, raw_edges, directed)
    return DirectedGraph.from_edges(n, edges, vertex_weights, edge_weights)


def load_edge_list(source, directed: bool = True) -> DirectedGraph:
    """Parse an edge list with one "u v [w]" line per edge.

    Vertex ids are arbitrary non-negative integers and get compacted to a
    dense range in ascending id order. With ``directed=False`` each
    unordered pair {u, v} becomes the single edge (min, max), which fixes a
    linear order on the vertices; any other fixed order would give an
    isomorphic complex.
    """
    raw = []
    ids: set[int] = set()
    for line, text in _input_lines(source):
        tokens = text.split()
        if len(tokens) not in (2, 3):
            raise ParseError(f"expected 'u v [w]', got {text!r}", line)
        u = _parse_vertex(tokens[0], line)
        v = _parse_vertex(tokens[1], line)
        weight = _parse_weight(tokens[2], line) if len(tokens) == 3 else None
        raw.append((line, u, v, weight))
        ids.add(u)
        ids.add(v)
    compact = {vertex: index for index, vertex in enumerate(sorted(ids))}
    raw = [(line, compact[u], compact[v], w) for line, u, v, w in raw]
    n = len(compact)
    edges, edge_weights = _assemble(n, raw, directed)
    return DirectedGraph.from_edges(n, edges, None, edge_weights)


def _format_value(x: float) -> str:
    return f"{x:g}"


def dump_flag_file(g: DirectedGraph) -> str:
    """Serialize a graph back to .flag text; inverse of load_flag_file."""
    out = ["dim 0"]
    weights = g.vertex_weights if g.vertex_weights is not None else [0.0] * g.n
    out.append(" ".join(_format_value(w) for w in weights))
    out.append("dim 1")
    for v, w in g.edges():
        if g.edge_weights is not None:
            out.append(f"{v} {w} {_format_value(g.edge_weights[(v, w)])}")
        else:
            out.append(f"{v} {w}")
    return "\n".join(out) + "\n"

"""Filtration values for simplices from vertex and/or edge weights.

A filter function must be monotone: a face never exceeds any simplex
containing it. Values are finite floats compared with exact equality;
inputs are finite decimals, so ties are well defined and no snapping is
applied.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import for_each_simplex
from .errors import ConfigError

ALGORITHMS = ("zero", "vertex-max", "edge-max", "max")


@dataclass(frozen=True)
class FiltrationSpec:
    """Named filtration algorithm plus the weights it reads from the graph.

    zero        every simplex gets 0
    vertex-max  maximum vertex weight of the simplex
    edge-max    maximum edge weight over the ordered vertex pairs; a lone
                vertex gets its vertex weight when present, else 0
    max         maximum over both vertex and edge weights
    """

    algorithm: str = "zero"

    def __post_init__(self):
        if self.algorithm not in ALGORITHMS:
            raise ConfigError(
                f"unknown filtration {self.algorithm!r}; choose from {ALGORITHMS}"
            )

    def validate(self, g) -> None:
        need_vertex = self.algorithm == "vertex-max"
        need_edge = self.algorithm == "edge-max"
        if need_vertex and g.vertex_weights is None:
            raise ConfigError("vertex-max filtration needs vertex weights")
        if need_edge and g.edge_weights is None:
            raise ConfigError("edge-max filtration needs edge weights")
        if self.algorithm == "max" and g.vertex_weights is None and g.edge_weights is None:
            raise ConfigError("max filtration needs vertex or edge weights")

    def value(self, s, g) -> float:
        algorithm = self.algorithm
        if algorithm == "zero":
            return 0.0
        if algorithm == "vertex-max":
            vw = g.vertex_weights
            if vw is None:
                raise ConfigError("vertex-max filtration needs vertex weights")
            return max(vw[v] for v in s)
        if algorithm == "edge-max":
            if len(s) == 1:
                return g.vertex_weights[s[0]] if g.vertex_weights is not None else 0.0
            ew = g.edge_weights
            if ew is None:
                raise ConfigError("edge-max filtration needs edge weights")
            return max(ew[(s[i], s[j])] for i in range(len(s)) for j in range(i + 1, len(s)))
        # max: best over whichever weight families the graph carries
        if g.vertex_weights is None and g.edge_weights is None:
            raise ConfigError("max filtration needs vertex or edge weights")
        best = None
        if g.vertex_weights is not None:
            best = max(g.vertex_weights[v] for v in s)
        if g.edge_weights is not None and len(s) > 1:
            ew = g.edge_weights
            edge_best = max(
                ew[(s[i], s[j])] for i in range(len(s)) for j in range(i + 1, len(s))
            )
            best = edge_best if best is None else max(best, edge_best)
        return 0.0 if best is None else best

    def provably_monotone(self) -> bool:
        # zero is constant; vertex-max and max take maxima over vertex sets
        # (and edge sets) that only grow with the simplex. edge-max mixes
        # vertex values into dimension 0 only, so it depends on the data.
        return type(self) is FiltrationSpec and self.algorithm in ("zero", "vertex-max", "max")


def simplex_value(spec: FiltrationSpec, s, g) -> float:
    return spec.value(s, g)


def check_monotone(spec: FiltrationSpec, g, max_dim=None) -> bool:
    """True iff every codimension-1 face value is <= its simplex value."""
    spec.validate(g)
    bad = False

    def visit(s):
        nonlocal bad
        if len(s) == 1:
            return False
        fs = spec.value(s, g)
        for i in range(len(s)):
            face = s[:i] + s[i + 1 :]
            if spec.value(face, g) > fs:
                bad = True
                return True
        return False

    for_each_simplex(g, visit, max_dim=max_dim)
    return not bad

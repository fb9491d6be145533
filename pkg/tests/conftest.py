import random
from pathlib import Path

import pytest

from dflag import DirectedGraph

DATA = Path(__file__).parent / "data"

# 5 vertices, 8 edges, betti (1, 1, 1): a 2-sphere made of two doubled
# triangles over the reciprocal pair 2<->3, plus the arc 1 -> 0 -> 4.
SPHERE_ARC_EDGES = [(0, 4), (1, 0), (1, 2), (1, 3), (2, 3), (3, 2), (4, 2), (4, 3)]


def sphere_with_arc() -> DirectedGraph:
    return DirectedGraph.from_edges(5, SPHERE_ARC_EDGES)


def three_clique() -> DirectedGraph:
    return DirectedGraph.from_edges(3, [(0, 1), (0, 2), (1, 2)])


def reciprocal_pair() -> DirectedGraph:
    return DirectedGraph.from_edges(2, [(0, 1), (1, 0)])


def directed_cycle(n: int) -> DirectedGraph:
    return DirectedGraph.from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def er_digraph(n: int, p: float, seed: int, max_weight: int | None = None) -> DirectedGraph:
    """Erdos-Renyi digraph; integer edge weights in 1..max_weight if asked."""
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < p]
    weights = None
    if max_weight is not None:
        weights = {e: float(rng.randint(1, max_weight)) for e in edges}
    return DirectedGraph.from_edges(n, edges, edge_weights=weights)


@pytest.fixture
def sphere_arc_graph():
    return sphere_with_arc()


@pytest.fixture
def sphere_arc_path() -> Path:
    return DATA / "sphere_with_arc.flag"

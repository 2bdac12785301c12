"""Commuting graphs, clique-union decomposition, and genus.

Genus is computed only for disjoint unions of cliques, where it is additive
over the blocks and each block is a complete graph with known genus; every
other topology raises UnsupportedTopologyError rather than guessing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Union

import numpy as np

from .errors import UnsupportedTopologyError
from .ring import FiniteRing, center


@dataclass(frozen=True)
class CommutingGraph:
    """Simple undirected graph on the non-central elements of a ring."""

    ring_label: str
    vertices: tuple[int, ...]          # ring element indices, ascending
    adjacency: np.ndarray              # symmetric bool matrix, zero diagonal

    def __post_init__(self):
        n = len(self.vertices)
        if self.adjacency.shape != (n, n):
            raise ValueError("adjacency shape must match vertex count")
        if n and (self.adjacency.diagonal().any()
                  or not np.array_equal(self.adjacency, self.adjacency.T)):
            raise ValueError("adjacency must be symmetric with zero diagonal")
        self.adjacency.setflags(write=False)

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return int(self.adjacency.sum()) // 2


@dataclass(frozen=True)
class CliqueDecomposition:
    """Sizes of the cliques of a graph that is a disjoint union of cliques."""

    sizes: tuple[int, ...]  # ascending

    @property
    def vertex_count(self) -> int:
        return sum(self.sizes)


@dataclass(frozen=True)
class NotCliqueUnion:
    """Witness that a graph is not a clique union: uv, vw edges, uw a non-edge."""

    witness: tuple[int, int, int]  # (u, v, w) as vertex labels


def commuting_graph(ring: FiniteRing) -> CommutingGraph:
    """Graph on R \\ Z(R) with edges between commuting elements.

    A commutative ring yields the empty graph.
    """
    central = np.zeros(ring.order, dtype=bool)
    central[np.asarray(center(ring).members, dtype=np.int64)] = True
    vertices = np.flatnonzero(~central)
    commute = ring.mul == ring.mul.T
    adj = commute[np.ix_(vertices, vertices)].copy()
    np.fill_diagonal(adj, False)
    return CommutingGraph(ring.label, tuple(int(v) for v in vertices), adj)


def graph_from_edges(vertices, edges, label: str = "custom") -> CommutingGraph:
    """Build a CommutingGraph directly; used to inject non-ring topologies."""
    vertices = tuple(vertices)
    pos = {v: i for i, v in enumerate(vertices)}
    adj = np.zeros((len(vertices), len(vertices)), dtype=bool)
    for u, v in edges:
        if u == v:
            raise ValueError("loops are not allowed")
        adj[pos[u], pos[v]] = adj[pos[v], pos[u]] = True
    return CommutingGraph(label, vertices, adj)


def connected_components(graph: CommutingGraph) -> list[tuple[int, ...]]:
    """Vertex sets of the components, each ascending, ordered by minimum vertex."""
    n = graph.order
    seen = np.zeros(n, dtype=bool)
    components = []
    for start in range(n):
        if seen[start]:
            continue
        frontier = [start]
        seen[start] = True
        comp = [start]
        while frontier:
            nxt = []
            for u in frontier:
                for v in np.flatnonzero(graph.adjacency[u]):
                    if not seen[v]:
                        seen[v] = True
                        comp.append(int(v))
                        nxt.append(int(v))
            frontier = nxt
        components.append(tuple(graph.vertices[i] for i in sorted(comp)))
    return components


def clique_union_decomposition(
    graph: CommutingGraph,
) -> Union[CliqueDecomposition, NotCliqueUnion]:
    """Clique sizes if every component is complete, else a path witness.

    The negative case is a value: NotCliqueUnion carrying (u, v, w) with uv and
    vw edges but uw a non-edge.
    """
    pos = {v: i for i, v in enumerate(graph.vertices)}
    adj = graph.adjacency
    sizes = []
    for comp in connected_components(graph):
        idx = [pos[v] for v in comp]
        sub = adj[np.ix_(idx, idx)]
        if sub.sum() == len(idx) * (len(idx) - 1):
            sizes.append(len(idx))
            continue
        for a in range(len(idx)):
            for b in range(a + 1, len(idx)):
                if sub[a, b]:
                    continue
                common = np.flatnonzero(sub[a] & sub[b])
                if common.size:
                    return NotCliqueUnion((comp[a], comp[int(common[0])],
                                           comp[b]))
        raise AssertionError("connected non-complete component has a "
                             "distance-2 pair")  # unreachable
    return CliqueDecomposition(tuple(sorted(sizes)))


@dataclass(frozen=True)
class GenusResult:
    genus: int
    classification: Literal["planar", "toroidal", "higher"]


def _classify(genus: int) -> GenusResult:
    if genus == 0:
        return GenusResult(0, "planar")
    if genus == 1:
        return GenusResult(1, "toroidal")
    return GenusResult(genus, "higher")


def genus_complete(n: int) -> int:
    """Genus of the complete graph K_n: ceil((n-3)(n-4)/12), 0 for n <= 2."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n <= 2:
        return 0
    return ((n - 3) * (n - 4) + 11) // 12


def genus_clique_union(decomposition: CliqueDecomposition) -> GenusResult:
    """Genus of a disjoint clique union: additive over the cliques."""
    return _classify(sum(genus_complete(m) for m in decomposition.sizes))


def genus(graph: CommutingGraph) -> GenusResult:
    """Genus of a clique-union graph; anything else is unsupported."""
    decomposition = clique_union_decomposition(graph)
    if isinstance(decomposition, NotCliqueUnion):
        raise UnsupportedTopologyError(
            decomposition.witness,
            f"graph {graph.ring_label!r} is not a clique union "
            f"(witness {decomposition.witness}); general genus is out of scope")
    return genus_clique_union(decomposition)

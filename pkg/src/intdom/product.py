"""Cartesian products of graphs and projections of product multisets.

Product vertex ``(g, h)`` has id ``g * n_h + h`` (G coordinate major).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph, GraphError
from .multiset import Multiset

ONTO_G = "G"
ONTO_H = "H"


@dataclass(frozen=True)
class ProductGraph:
    g: Graph
    h: Graph
    graph: Graph = field(repr=False)

    @property
    def n_g(self) -> int:
        return self.g.n

    @property
    def n_h(self) -> int:
        return self.h.n

    def index(self, g: int, h: int) -> int:
        if not (0 <= g < self.g.n and 0 <= h < self.h.n):
            raise GraphError(f"({g},{h}) is not a product vertex")
        return g * self.h.n + h

    def pair(self, v: int) -> tuple[int, int]:
        if not (0 <= v < self.graph.n):
            raise GraphError(f"product vertex id {v} out of range")
        return divmod(v, self.h.n)

    def g_neighborhood(self, v: int) -> frozenset[int]:
        """Neighbors of ``v`` reached along a G-edge (same h, adjacent g)."""
        g, h = self.pair(v)
        return frozenset(x * self.h.n + h for x in self.g.neighbors(g))

    def h_neighborhood(self, v: int) -> frozenset[int]:
        """Neighbors of ``v`` reached along an H-edge (same g, adjacent h)."""
        g, h = self.pair(v)
        return frozenset(g * self.h.n + y for y in self.h.neighbors(h))

    def g_edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, v in self.graph.edges() if u % self.h.n == v % self.h.n]

    def h_edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, v in self.graph.edges() if u // self.h.n == v // self.h.n]

    def format_vertex(self, v: int) -> str:
        g, h = self.pair(v)
        return f"({g},{h})"

    def phi(self, a: Multiset, side: str) -> Multiset:
        return phi_projection(self, a, side)

    def psi(self, a: Multiset, side: str) -> Multiset:
        return psi_projection(self, a, side)


def cartesian_product(g: Graph, h: Graph) -> ProductGraph:
    nh = h.n
    edges = [(x * nh + u, x * nh + v) for x in range(g.n) for u, v in h.edges()]
    edges += [(u * nh + y, v * nh + y) for u, v in g.edges() for y in range(nh)]
    return ProductGraph(g, h, Graph(g.n * nh, edges))


def _coordinate(pg: ProductGraph, side: str):
    if side == ONTO_G:
        return lambda v: v // pg.h.n
    if side == ONTO_H:
        return lambda v: v % pg.h.n
    raise ValueError(f"side must be {ONTO_G!r} or {ONTO_H!r}, got {side!r}")


def phi_projection(pg: ProductGraph, a: Multiset, side: str) -> Multiset:
    """Project onto one factor keeping, per vertex, the largest fiber count."""
    coord = _coordinate(pg, side)
    counts: dict[int, int] = {}
    for v, m in a.items():
        pg.pair(v)
        x = coord(v)
        if m > counts.get(x, 0):
            counts[x] = m
    return Multiset.from_counts(counts)


def psi_projection(pg: ProductGraph, a: Multiset, side: str) -> Multiset:
    """Project onto one factor summing fiber counts; cardinality is kept."""
    coord = _coordinate(pg, side)
    counts: dict[int, int] = {}
    for v, m in a.items():
        pg.pair(v)
        x = coord(v)
        counts[x] = counts.get(x, 0) + m
    return Multiset.from_counts(counts)

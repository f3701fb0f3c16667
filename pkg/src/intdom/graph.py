"""Simple undirected graphs on vertex ids ``0..n-1``.

Besides neighborhood queries this module holds the domination relation
between multisets of vertices, the graph families used in sweeps, and the
plain-text edge-list format::

    # comment
    n 5
    e 0 1
    e 1 2
"""

from __future__ import annotations

import random
from typing import Iterable

from .multiset import Multiset


class GraphError(ValueError):
    pass


class EdgeListError(GraphError):
    """Malformed edge-list text; ``lineno`` is 1-based."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class Graph:
    """Immutable simple undirected graph.

    Vertices are ``0..n-1``.  Edges may be given in either orientation;
    self-loops and repeated edges are rejected.
    """

    __slots__ = ("n", "_adj", "_closed", "_edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if isinstance(n, bool) or not isinstance(n, int) or n < 0:
            raise GraphError(f"vertex count must be a nonnegative int, got {n!r}")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            for x in (u, v):
                if not (0 <= x < n):
                    raise GraphError(f"vertex {x} out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if v in adj[u]:
                raise GraphError(f"duplicate edge {min(u, v)}-{max(u, v)}")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self._adj = tuple(tuple(sorted(a)) for a in adj)
        self._closed = tuple(frozenset(a) | {v} for v, a in enumerate(adj))
        self._edges = tuple(sorted((u, v) for u in range(n) for v in self._adj[u] if u < v))

    def _check(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise GraphError(f"vertex {v!r} out of range for n={self.n}")

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Open neighborhood, sorted."""
        self._check(v)
        return self._adj[v]

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        self._check(v)
        return self._closed[v]

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        return v in self._closed[u] and u != v

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def max_degree(self) -> int:
        return max((len(a) for a in self._adj), default=0)

    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as ``(u, v)`` with ``u < v``, sorted."""
        return self._edges

    @property
    def num_edges(self) -> int:
        return len(self._edges)

    def vertices(self) -> range:
        return range(self.n)

    def all_vertices(self) -> Multiset:
        """V(G) as a multiset, each vertex once."""
        return Multiset(range(self.n))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self.n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self._edges)})"


def dominates(g: Graph, a: Multiset, b: Multiset) -> bool:
    """Whether ``a`` dominates ``b`` in ``g``.

    For each ``x`` in ``b`` the copies of ``N[x]`` in ``a`` must be at least
    the multiplicity of ``x`` in ``b``.
    """
    for x in a.support():
        g._check(x)
    for x, m in b.items():
        if a.count_over_set(g.closed_neighborhood(x)) < m:
            return False
    return True


# -- families ---------------------------------------------------------------

def path(n: int) -> Graph:
    """Path ``0-1-...-(n-1)``."""
    _need(n >= 1, f"path needs n >= 1, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    """Cycle in ring order ``0-1-...-(n-1)-0``."""
    _need(n >= 3, f"cycle needs n >= 3, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    _need(n >= 1, f"complete graph needs n >= 1, got {n}")
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def star(n: int) -> Graph:
    """Star on ``n`` vertices: centre 0 joined to ``1..n-1``."""
    _need(n >= 1, f"star needs n >= 1, got {n}")
    return Graph(n, [(0, v) for v in range(1, n)])


def grid(rows: int, cols: int) -> Graph:
    """``rows x cols`` grid, vertex ``r*cols + c`` (row-major)."""
    _need(rows >= 1 and cols >= 1, f"grid needs positive dimensions, got {rows}x{cols}")
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return Graph(rows * cols, edges)


def random_gnp(n: int, p: float, seed: int) -> Graph:
    """G(n, p) with a reproducible stream.

    Pairs ``u < v`` are visited in lexicographic order and each is kept when
    the next draw of ``random.Random(seed)`` falls below ``p``.
    """
    _need(n >= 1, f"random graph needs n >= 1, got {n}")
    _need(0.0 <= p <= 1.0, f"edge probability must lie in [0, 1], got {p}")
    _need(isinstance(seed, int) and 0 <= seed < 2**64, f"seed must be a 64-bit unsigned int, got {seed!r}")
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, edges)


def disjoint_union(*graphs: Graph) -> Graph:
    """Vertices of later graphs are shifted past those of earlier ones."""
    _need(len(graphs) >= 1, "disjoint_union needs at least one graph")
    offset, edges = 0, []
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.n
    return Graph(offset, edges)


FAMILIES = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "star": star,
    "grid": grid,
    "random_gnp": random_gnp,
    "disjoint_union": disjoint_union,
}


def generate(family: str, *args, **params) -> Graph:
    """Dispatch by family name, e.g. ``generate("grid", rows=2, cols=3)``."""
    try:
        fn = FAMILIES[family]
    except KeyError:
        raise GraphError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}") from None
    try:
        return fn(*args, **params)
    except TypeError as exc:
        raise GraphError(f"bad parameters for {family}: {exc}") from None


def _need(cond: bool, message: str) -> None:
    if not cond:
        raise GraphError(message)


# -- edge-list format ---------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    n = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if parts[0] != "n" or len(parts) != 2:
                raise EdgeListError(lineno, f"expected header 'n <count>', got {line!r}")
            n = _parse_int(parts[1], lineno)
            if n < 0:
                raise EdgeListError(lineno, f"negative vertex count {n}")
            continue
        if parts[0] != "e" or len(parts) != 3:
            raise EdgeListError(lineno, f"expected 'e <u> <v>', got {line!r}")
        u, v = _parse_int(parts[1], lineno), _parse_int(parts[2], lineno)
        for x in (u, v):
            if not (0 <= x < n):
                raise EdgeListError(lineno, f"vertex {x} out of range for n={n}")
        if u == v:
            raise EdgeListError(lineno, f"self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise EdgeListError(lineno, f"duplicate edge {key[0]}-{key[1]}")
        seen.add(key)
        edges.append(key)
    if n is None:
        raise EdgeListError(1, "missing header 'n <count>'")
    return Graph(n, edges)


def _parse_int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise EdgeListError(lineno, f"not an integer: {tok!r}") from None


def serialize_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"] + [f"e {u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def read_edge_list(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())

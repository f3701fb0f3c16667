"""k-partitions of a vertex set anchored at a {k}-dominating sequence.

Block ``i`` contains its anchor ``u_i`` and lies inside ``N[u_i]``; every
vertex lies in exactly ``k`` blocks.  Block indices are 0-based positions
in the anchor sequence.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph
from .multiset import Multiset
from .solver import is_k_dominating


class PartitionError(ValueError):
    pass


@dataclass(frozen=True)
class KPartition:
    k: int
    anchors: tuple[int, ...]
    blocks: tuple[tuple[int, ...], ...]
    membership: tuple[tuple[int, ...], ...]

    @classmethod
    def from_blocks(cls, k: int, anchors: Sequence[int], blocks: Sequence[Sequence[int]], n: int) -> "KPartition":
        """Assemble from raw blocks, deriving ``membership``.

        No invariant is enforced here; use :func:`validate_k_partition`.
        """
        members: list[list[int]] = [[] for _ in range(n)]
        for i, block in enumerate(blocks):
            for v in block:
                if 0 <= v < n:
                    members[v].append(i)
        return cls(
            k,
            tuple(anchors),
            tuple(tuple(sorted(b)) for b in blocks),
            tuple(tuple(sorted(m)) for m in members),
        )

    def block_index(self, v: int, s: int) -> int:
        """The ``s``-th block (0-based) that contains ``v``."""
        if not (0 <= s < self.k):
            raise PartitionError(f"copy index {s} outside 0..{self.k - 1}")
        return self.membership[v][s]

    def inverse_block(self, v: int, i: int) -> int:
        """Position of block ``i`` among the blocks containing ``v``."""
        try:
            return self.membership[v].index(i)
        except ValueError:
            raise PartitionError(f"vertex {v} is not in block {i}") from None

    def __len__(self) -> int:
        return len(self.blocks)


def build_k_partition(g: Graph, k: int, anchors: Sequence[int]) -> KPartition:
    """Build a k-partition of ``V(g)`` around a {k}-dominating anchor sequence.

    Every vertex first joins the blocks it anchors, then fills up to ``k``
    with blocks whose anchor neighbors it, least loaded first and lowest
    index on ties.
    """
    anchors = tuple(anchors)
    ms = Multiset(anchors)
    if ms.max_multiplicity() > k:
        raise PartitionError(f"an anchor repeats more than k={k} times")
    if not is_k_dominating(g, k, ms):
        raise PartitionError(f"anchors are not {{{k}}}-dominating")

    blocks: list[list[int]] = [[] for _ in anchors]
    owned: list[list[int]] = [[] for _ in range(g.n)]
    for i, u in enumerate(anchors):
        owned[u].append(i)
    candidates: list[list[int]] = [[] for _ in range(g.n)]
    for i, u in enumerate(anchors):
        for v in g.closed_neighborhood(u):
            if u != v:
                candidates[v].append(i)

    for v in g.vertices():
        for i in owned[v]:
            blocks[i].append(v)
        for _ in range(k - len(owned[v])):
            i = min(candidates[v], key=lambda b: (len(blocks[b]), b))
            candidates[v].remove(i)
            blocks[i].append(v)
    return KPartition.from_blocks(k, anchors, blocks, g.n)


def validate_k_partition(g: Graph, p: KPartition) -> list[str]:
    """Human-readable list of broken invariants; empty when valid."""
    out = []
    if len(p.blocks) != len(p.anchors):
        out.append(f"{len(p.blocks)} blocks for {len(p.anchors)} anchors")
    if len(p.membership) != g.n:
        out.append(f"membership covers {len(p.membership)} vertices, graph has {g.n}")
    for i, block in enumerate(p.blocks):
        if len(set(block)) != len(block):
            out.append(f"P_{i} repeats a vertex")
        bad = [v for v in block if not (0 <= v < g.n)]
        if bad:
            out.append(f"P_{i} holds invalid vertex ids {bad}")
        if i >= len(p.anchors):
            continue
        u = p.anchors[i]
        if not (0 <= u < g.n):
            out.append(f"anchor u_{i}={u} is not a vertex")
            continue
        if u not in block:
            out.append(f"anchor u_{i}={u} not in P_{i}")
        outside = sorted(v for v in block if 0 <= v < g.n and v not in g.closed_neighborhood(u))
        if outside:
            out.append(f"P_{i} not a subset of N[u_{i}]: contains {outside}")
    hits = [0] * g.n
    for block in p.blocks:
        for v in set(block):
            if 0 <= v < g.n:
                hits[v] += 1
    for v in g.vertices():
        if hits[v] != p.k:
            out.append(f"vertex {v} appears in {hits[v]} blocks, expected {p.k}")
    if len(p.membership) == g.n:
        for v in g.vertices():
            expected = tuple(i for i, b in enumerate(p.blocks) if v in b)
            if tuple(p.membership[v]) != expected:
                out.append(f"membership of vertex {v} is {list(p.membership[v])}, blocks say {list(expected)}")
    return out

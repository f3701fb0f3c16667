"""Per-instance certificates for gamma_k(G) * gamma_k(H) <= 2k * gamma_k(G x H).

:func:`build_certificate` lays out every intermediate object of the
double-projection argument for one concrete ``(G, H, k)``:

* k-partitions ``P^G``, ``P^H`` anchored at optimal witnesses;
* ``k`` dominators ``d_0..d_{k-1}`` per product vertex, the copy of
  ``gh`` coming from block pair ``(i, j)`` getting ``d_{(s+r) mod k}``;
* one binary matrix ``F_ij`` per block pair (0 = dominated along a G-edge,
  1 = by itself or along an H-edge) with its column/row classification;
* the multisets ``N_i``, ``N_bar_j``, ``Y_i``, ``Y_bar_j`` and the strips
  ``S_i``, ``S_bar_j`` of the product witness;
* the chain ``lhs <= sum_n <= sum_s = rhs``.

:func:`verify_certificate` re-derives all of it from the stored data alone,
in nine numbered checks.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable

import jsonschema

from .graph import Graph, GraphError, dominates
from .multiset import Multiset
from .partition import KPartition, build_k_partition, validate_k_partition
from .product import ONTO_G, ONTO_H, ProductGraph, cartesian_product, psi_projection
from .solver import SolveResult, is_k_dominating

FORMAT_VERSION = 1
COLUMNS_HAVE_ONE = "a"
ROWS_HAVE_ZERO = "b"


class CertificateError(ValueError):
    """Inputs cannot produce a certificate (non-optimal or infeasible witness)."""


class CertificateFormatError(ValueError):
    """Certificate JSON is malformed; ``path`` is a JSON path like ``$.blocks[3].rows``."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


@dataclass(frozen=True)
class BlockMatrix:
    """``F_ij``: rows follow ``P^G_i`` and columns ``P^H_j``, both ascending."""

    i: int
    j: int
    entries: tuple[tuple[int, ...], ...]
    classification: frozenset[str]


@dataclass(frozen=True)
class Chain:
    lhs: int
    sum_n: int
    sum_s: int
    rhs: int


@dataclass(frozen=True)
class Certificate:
    k: int
    g: Graph
    h: Graph
    gamma_g: int
    gamma_h: int
    gamma_gh: int
    witness_g: Multiset
    witness_h: Multiset
    d_k: Multiset
    partition_g: KPartition
    partition_h: KPartition
    assignment: dict[int, tuple[int, ...]]
    blocks: tuple[BlockMatrix, ...]
    n_sets: tuple[Multiset, ...]
    n_bar_sets: tuple[Multiset, ...]
    y_sets: tuple[Multiset, ...]
    y_bar_sets: tuple[Multiset, ...]
    s_sizes: tuple[int, ...]
    s_bar_sizes: tuple[int, ...]
    chain: Chain
    # the strips themselves are not serialized; parsed certificates leave them None
    s_sets: tuple[Multiset, ...] | None = None
    s_bar_sets: tuple[Multiset, ...] | None = None
    z_sets: tuple[Multiset, ...] | None = None
    z_bar_sets: tuple[Multiset, ...] | None = None
    _product: list = field(default_factory=list, init=False, repr=False, compare=False)

    @property
    def product(self) -> ProductGraph:
        if not self._product:
            self._product.append(cartesian_product(self.g, self.h))
        return self._product[0]

    def block(self, i: int, j: int) -> BlockMatrix:
        for b in self.blocks:
            if b.i == i and b.j == j:
                return b
        raise KeyError((i, j))


# -- construction -------------------------------------------------------------

def assign_dominators(pg: ProductGraph, k: int, d_k: Multiset) -> dict[int, tuple[int, ...]]:
    """First ``k`` copies of ``D_k`` inside ``N[gh]``, ascending product id."""
    out = {}
    for v in pg.graph.vertices():
        copies = d_k.restrict(pg.graph.closed_neighborhood(v)).elements()
        if len(copies) < k:
            raise CertificateError(
                f"product vertex {pg.format_vertex(v)} has {len(copies)} dominators, needs {k}"
            )
        out[v] = tuple(copies[:k])
    return out


def dominator_of_copy(assignment: dict[int, tuple[int, ...]], v: int, s: int, r: int) -> int:
    """Dominator of copy ``(s, r)`` of product vertex ``v`` (0-based ``s``, ``r``)."""
    ds = assignment[v]
    return ds[(s + r) % len(ds)]


def classify_matrix(entries) -> frozenset[str]:
    """``"a"`` if every column has a 1, ``"b"`` if every row has a 0.

    At least one always holds for a 0/1 matrix: a row of all ones and a
    column of all zeros would have to cross.
    """
    rows = [tuple(r) for r in entries]
    if not rows or not rows[0]:
        raise ValueError("cannot classify an empty matrix")
    out = set()
    if all(any(r[c] == 1 for r in rows) for c in range(len(rows[0]))):
        out.add(COLUMNS_HAVE_ONE)
    if all(0 in r for r in rows):
        out.add(ROWS_HAVE_ZERO)
    return frozenset(out)


def f_entries(pg: ProductGraph, part_g: KPartition, part_h: KPartition,
              assignment: dict[int, tuple[int, ...]], i: int, j: int) -> tuple[tuple[int, ...], ...]:
    rows = []
    for g in part_g.blocks[i]:
        s = part_g.inverse_block(g, i)
        row = []
        for h in part_h.blocks[j]:
            r = part_h.inverse_block(h, j)
            v = pg.index(g, h)
            d = dominator_of_copy(assignment, v, s, r)
            row.append(0 if d in pg.g_neighborhood(v) else 1)
        rows.append(tuple(row))
    return tuple(rows)


def build_f_matrix(pg: ProductGraph, part_g: KPartition, part_h: KPartition,
                   assignment: dict[int, tuple[int, ...]], i: int, j: int) -> BlockMatrix:
    entries = f_entries(pg, part_g, part_h, assignment, i, j)
    return BlockMatrix(i, j, entries, classify_matrix(entries))


def strip_sets(pg: ProductGraph, part: KPartition, k: int, d_k: Multiset, side: str) -> list[Multiset]:
    """``D_k`` intersected with ``k`` copies of each strip ``P_i x V(H)`` (or ``V(G) x P_j``)."""
    out = []
    for block in part.blocks:
        if side == ONTO_G:
            strip = [pg.index(g, h) for g in block for h in pg.h.vertices()]
        else:
            strip = [pg.index(g, h) for g in pg.g.vertices() for h in block]
        out.append(d_k.intersect(Multiset(strip).power_union(k)))
    return out


def _n_sets(part_g, part_h, cls):
    n = [Multiset([part_h.anchors[j] for j in range(len(part_h)) if COLUMNS_HAVE_ONE in cls[i, j]])
         for i in range(len(part_g))]
    n_bar = [Multiset([part_g.anchors[i] for i in range(len(part_g)) if ROWS_HAVE_ZERO in cls[i, j]])
             for j in range(len(part_h))]
    return n, n_bar


def _y_sets(part_g, part_h, cls):
    y = [Multiset([v for j in range(len(part_h)) if COLUMNS_HAVE_ONE in cls[i, j] for v in part_h.blocks[j]])
         for i in range(len(part_g))]
    y_bar = [Multiset([v for i in range(len(part_g)) if ROWS_HAVE_ZERO in cls[i, j] for v in part_g.blocks[i]])
             for j in range(len(part_h))]
    return y, y_bar


def _z_sets(pg, part_g, part_h, cls):
    def block_product(i, j):
        return [pg.index(g, h) for g in part_g.blocks[i] for h in part_h.blocks[j]]
    z = [Multiset([v for j in range(len(part_h)) if COLUMNS_HAVE_ONE in cls[i, j] for v in block_product(i, j)])
         for i in range(len(part_g))]
    z_bar = [Multiset([v for i in range(len(part_g)) if ROWS_HAVE_ZERO in cls[i, j] for v in block_product(i, j)])
             for j in range(len(part_h))]
    return z, z_bar


def build_certificate(g: Graph, h: Graph, k: int, solve_g: SolveResult, solve_h: SolveResult,
                      solve_gh: SolveResult, store_z: bool = False) -> Certificate:
    for name, res in (("G", solve_g), ("H", solve_h), ("G x H", solve_gh)):
        if not res.optimal:
            raise CertificateError(f"solve of {name} is not proven optimal")
        if res.k != k:
            raise CertificateError(f"solve of {name} used k={res.k}, expected {k}")
    pg = cartesian_product(g, h)
    if not is_k_dominating(pg.graph, k, solve_gh.witness):
        raise CertificateError("product witness is not {k}-dominating")
    part_g = build_k_partition(g, k, solve_g.witness.elements())
    part_h = build_k_partition(h, k, solve_h.witness.elements())
    d_k = solve_gh.witness
    assignment = assign_dominators(pg, k, d_k)

    blocks = tuple(build_f_matrix(pg, part_g, part_h, assignment, i, j)
                   for i in range(len(part_g)) for j in range(len(part_h)))
    cls = {(b.i, b.j): b.classification for b in blocks}
    n, n_bar = _n_sets(part_g, part_h, cls)
    y, y_bar = _y_sets(part_g, part_h, cls)
    s = strip_sets(pg, part_g, k, d_k, ONTO_G)
    s_bar = strip_sets(pg, part_h, k, d_k, ONTO_H)
    z = z_bar = None
    if store_z:
        z, z_bar = _z_sets(pg, part_g, part_h, cls)
        z, z_bar = tuple(z), tuple(z_bar)

    chain = Chain(
        lhs=solve_g.gamma * solve_h.gamma,
        sum_n=sum(map(len, n)) + sum(map(len, n_bar)),
        sum_s=sum(map(len, s)) + sum(map(len, s_bar)),
        rhs=2 * k * solve_gh.gamma,
    )
    cert = Certificate(
        k=k, g=g, h=h,
        gamma_g=solve_g.gamma, gamma_h=solve_h.gamma, gamma_gh=solve_gh.gamma,
        witness_g=solve_g.witness, witness_h=solve_h.witness, d_k=d_k,
        partition_g=part_g, partition_h=part_h,
        assignment=assignment, blocks=blocks,
        n_sets=tuple(n), n_bar_sets=tuple(n_bar), y_sets=tuple(y), y_bar_sets=tuple(y_bar),
        s_sizes=tuple(map(len, s)), s_bar_sizes=tuple(map(len, s_bar)),
        chain=chain,
        s_sets=tuple(s), s_bar_sets=tuple(s_bar), z_sets=z, z_bar_sets=z_bar,
    )
    cert._product.append(pg)
    return cert


# -- verification -------------------------------------------------------------

@dataclass(frozen=True)
class CheckResult:
    number: int
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = f": {self.detail}" if self.detail else ""
        return f"check {self.number} {status} {self.name}{tail}"


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple[CheckResult, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failed(self) -> list[int]:
        return [c.number for c in self.checks if not c.passed]

    def lines(self) -> list[str]:
        return [c.line() for c in self.checks]


class _Fail(Exception):
    pass


def _expect(cond: bool, message: str) -> None:
    if not cond:
        raise _Fail(message)


def _check_witnesses(c: Certificate) -> str:
    for name, graph, wit, gamma in (("G", c.g, c.witness_g, c.gamma_g),
                                    ("H", c.h, c.witness_h, c.gamma_h),
                                    ("G x H", c.product.graph, c.d_k, c.gamma_gh)):
        _expect(len(wit) == gamma, f"|witness of {name}| = {len(wit)} but gamma stated as {gamma}")
        _expect(wit.max_multiplicity() <= c.k, f"witness of {name} repeats a vertex more than k times")
        _expect(is_k_dominating(graph, c.k, wit), f"witness of {name} is not {{{c.k}}}-dominating")
    return f"gamma_G={c.gamma_g} gamma_H={c.gamma_h} gamma_GxH={c.gamma_gh}"


def _check_partitions(c: Certificate) -> str:
    for name, graph, part, wit in (("G", c.g, c.partition_g, c.witness_g),
                                   ("H", c.h, c.partition_h, c.witness_h)):
        _expect(part.k == c.k, f"partition of {name} has k={part.k}")
        problems = validate_k_partition(graph, part)
        _expect(not problems, f"partition of {name}: " + "; ".join(problems))
        _expect(Multiset(part.anchors) == wit, f"anchors of {name} differ from its witness")
    # product blocks cover every product vertex k^2 times
    hits_g = [len(m) for m in c.partition_g.membership]
    hits_h = [len(m) for m in c.partition_h.membership]
    _expect(all(a * b == c.k ** 2 for a in hits_g for b in hits_h), "block products are not a k^2-partition")
    return f"|P^G|={len(c.partition_g)} |P^H|={len(c.partition_h)}"


def _check_assignment(c: Certificate) -> str:
    pg = c.product
    _expect(sorted(c.assignment) == list(pg.graph.vertices()), "assignment does not list every product vertex once")
    for v, ds in c.assignment.items():
        _expect(len(ds) == c.k, f"{pg.format_vertex(v)} has {len(ds)} dominators, expected {c.k}")
        closed = pg.graph.closed_neighborhood(v)
        for d in ds:
            _expect(d in closed, f"{pg.format_vertex(v)}: assigned {pg.format_vertex(d)} is not in its closed neighborhood")
        _expect(Multiset(ds) <= c.d_k, f"{pg.format_vertex(v)}: dominator list is not a sub-multiset of D_k")
    return f"{len(c.assignment)} product vertices, {c.k} dominators each"


def _check_matrices(c: Certificate) -> str:
    pg, pgp, php = c.product, c.partition_g, c.partition_h
    seen = set()
    for b in c.blocks:
        _expect((b.i, b.j) not in seen, f"F_{b.i},{b.j} listed twice")
        seen.add((b.i, b.j))
    expected = {(i, j) for i in range(len(pgp)) for j in range(len(php))}
    _expect(seen == expected, f"block pairs missing or extra: {sorted(expected ^ seen)}")
    for b in c.blocks:
        want = f_entries(pg, pgp, php, c.assignment, b.i, b.j)
        _expect(len(b.entries) == len(want) and all(len(r) == len(w) for r, w in zip(b.entries, want)),
                f"F_{b.i},{b.j} has the wrong shape")
        for gi, (row, wrow) in enumerate(zip(b.entries, want)):
            for hi, (x, y) in enumerate(zip(row, wrow)):
                _expect(x == y, f"F_{b.i},{b.j} cell (g={pgp.blocks[b.i][gi]}, h={php.blocks[b.j][hi]}) "
                                f"stored {x}, recomputed {y}")
        cls = classify_matrix(b.entries)
        _expect(b.classification == cls,
                f"F_{b.i},{b.j} classified {sorted(b.classification)}, recomputed {sorted(cls)}")
        _expect(bool(cls), f"F_{b.i},{b.j} satisfies neither column nor row property")
    return f"{len(c.blocks)} matrices"


def _classes(c: Certificate) -> dict:
    return {(b.i, b.j): b.classification for b in c.blocks}


def _check_block_count(c: Certificate) -> str:
    n, n_bar = _n_sets(c.partition_g, c.partition_h, _classes(c))
    for i, (got, want) in enumerate(zip(c.n_sets, n)):
        _expect(got == want, f"N_{i} stored {got}, recomputed {want}")
    _expect(len(c.n_sets) == len(n), "wrong number of N_i")
    for j, (got, want) in enumerate(zip(c.n_bar_sets, n_bar)):
        _expect(got == want, f"N_bar_{j} stored {got}, recomputed {want}")
    _expect(len(c.n_bar_sets) == len(n_bar), "wrong number of N_bar_j")
    total = sum(map(len, n)) + sum(map(len, n_bar))
    _expect(c.chain.sum_n == total, f"chain.sum_n is {c.chain.sum_n}, recomputed {total}")
    lhs = c.gamma_g * c.gamma_h
    _expect(lhs <= total, f"{lhs} > sum |N_i| + sum |N_bar_j| = {total}")
    return f"{lhs} <= {total}"


def _recomputed_strips(c: Certificate):
    pg = c.product
    return (strip_sets(pg, c.partition_g, c.k, c.d_k, ONTO_G),
            strip_sets(pg, c.partition_h, c.k, c.d_k, ONTO_H))


def _check_claim(c: Certificate) -> str:
    s, s_bar = _recomputed_strips(c)
    if c.s_sets is not None:
        s = list(c.s_sets)
    if c.s_bar_sets is not None:
        s_bar = list(c.s_bar_sets)
    y, y_bar = _y_sets(c.partition_g, c.partition_h, _classes(c))
    _expect(list(c.y_sets) == y, "stored Y_i differ from the union of their H-blocks")
    _expect(list(c.y_bar_sets) == y_bar, "stored Y_bar_j differ from the union of their G-blocks")
    _expect(len(s) == len(y) and len(s_bar) == len(y_bar), "strip count differs from Y set count")
    pg = c.product
    for i, (si, yi) in enumerate(zip(s, c.y_sets)):
        _expect(dominates(c.h, psi_projection(pg, si, ONTO_H), yi), f"Psi_H(S_{i}) does not dominate Y_{i}")
    for j, (sj, yj) in enumerate(zip(s_bar, c.y_bar_sets)):
        _expect(dominates(c.g, psi_projection(pg, sj, ONTO_G), yj), f"Psi_G(S_bar_{j}) does not dominate Y_bar_{j}")
    return f"{len(s)} + {len(s_bar)} strips dominate their Y sets"


def _check_strip_sizes(c: Certificate) -> str:
    _expect(len(c.s_sizes) == len(c.n_sets) and len(c.s_bar_sizes) == len(c.n_bar_sets), "size lists have wrong length")
    for i, (a, b) in enumerate(zip(c.s_sizes, c.n_sets)):
        _expect(a >= len(b), f"|S_{i}| = {a} < |N_{i}| = {len(b)}")
    for j, (a, b) in enumerate(zip(c.s_bar_sizes, c.n_bar_sets)):
        _expect(a >= len(b), f"|S_bar_{j}| = {a} < |N_bar_{j}| = {len(b)}")
    return "every strip outweighs its N set"


def _check_strip_sums(c: Certificate) -> str:
    s, s_bar = _recomputed_strips(c)
    for name, stored, want in (("S", c.s_sets, s), ("S_bar", c.s_bar_sets, s_bar)):
        if stored is not None:
            for i, (got, w) in enumerate(zip(stored, want)):
                _expect(got == w, f"{name}_{i} stored {got}, recomputed {w}")
            _expect(len(stored) == len(want), f"wrong number of {name} sets")
    _expect(list(c.s_sizes) == [len(x) for x in s], f"s_sizes {list(c.s_sizes)} != recomputed {[len(x) for x in s]}")
    _expect(list(c.s_bar_sizes) == [len(x) for x in s_bar],
            f"s_bar_sizes {list(c.s_bar_sizes)} != recomputed {[len(x) for x in s_bar]}")
    target = c.k * len(c.d_k)
    _expect(sum(c.s_sizes) == target, f"sum |S_i| = {sum(c.s_sizes)} != k|D_k| = {target}")
    _expect(sum(c.s_bar_sizes) == target, f"sum |S_bar_j| = {sum(c.s_bar_sizes)} != k|D_k| = {target}")
    _expect(c.chain.sum_s == 2 * target, f"chain.sum_s is {c.chain.sum_s}, expected {2 * target}")
    return f"sum |S_i| = sum |S_bar_j| = {target}"


def _check_final(c: Certificate) -> str:
    ch = c.chain
    lhs, rhs = c.gamma_g * c.gamma_h, 2 * c.k * c.gamma_gh
    _expect(ch.lhs == lhs, f"chain.lhs is {ch.lhs}, gamma_G*gamma_H = {lhs}")
    _expect(ch.rhs == rhs, f"chain.rhs is {ch.rhs}, 2k*gamma_GxH = {rhs}")
    _expect(ch.lhs <= ch.sum_n <= ch.sum_s == ch.rhs,
            f"chain {ch.lhs} <= {ch.sum_n} <= {ch.sum_s} = {ch.rhs} does not hold")
    return f"{ch.lhs} <= {ch.sum_n} <= {ch.sum_s} = {ch.rhs}"


CHECKS: tuple[tuple[int, str, Callable[[Certificate], str]], ...] = (
    (1, "witnesses", _check_witnesses),
    (2, "partitions", _check_partitions),
    (3, "dominator assignment", _check_assignment),
    (4, "block matrices", _check_matrices),
    (5, "block count", _check_block_count),
    (6, "strip domination", _check_claim),
    (7, "strip sizes", _check_strip_sizes),
    (8, "strip sums", _check_strip_sums),
    (9, "final inequality", _check_final),
)


def verify_certificate(cert: Certificate) -> VerificationReport:
    """Run all nine checks; each one runs even if an earlier one failed."""
    results = []
    for number, name, fn in CHECKS:
        try:
            results.append(CheckResult(number, name, True, fn(cert)))
        except _Fail as exc:
            results.append(CheckResult(number, name, False, str(exc)))
        except Exception as exc:  # inconsistent data upstream of this check
            results.append(CheckResult(number, name, False, f"{type(exc).__name__}: {exc}"))
    return VerificationReport(tuple(results))


# -- JSON ---------------------------------------------------------------------

_NAT = {"type": "integer", "minimum": 0}
_PAIR = {"type": "array", "items": _NAT, "minItems": 2, "maxItems": 2}
_COUNTED = {"type": "array", "prefixItems": [_NAT, {"type": "integer", "minimum": 1}], "minItems": 2, "maxItems": 2}
_COUNTED_PAIR = {"type": "array", "prefixItems": [_PAIR, {"type": "integer", "minimum": 1}], "minItems": 2, "maxItems": 2}
_GRAPH = {
    "type": "object",
    "required": ["n", "edges"],
    "properties": {"n": _NAT, "edges": {"type": "array", "items": _PAIR}},
}
_PARTITION = {
    "type": "object",
    "required": ["anchors", "blocks"],
    "properties": {"anchors": {"type": "array", "items": _NAT},
                   "blocks": {"type": "array", "items": {"type": "array", "items": _NAT}}},
}
_ELEMENT_LISTS = {"type": "array", "items": {"type": "array", "items": _NAT}}
_SIZES = {"type": "array", "items": _NAT}

SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["version", "k", "g", "h", "gamma_g", "gamma_h", "gamma_gh", "witness_g", "witness_h",
                 "d_k", "partition_g", "partition_h", "assignment", "blocks", "n_sets", "n_bar_sets",
                 "y_sets", "y_bar_sets", "s_sizes", "s_bar_sizes", "chain"],
    "properties": {
        "version": {"const": FORMAT_VERSION},
        "k": {"type": "integer", "minimum": 1},
        "g": _GRAPH,
        "h": _GRAPH,
        "gamma_g": _NAT,
        "gamma_h": _NAT,
        "gamma_gh": _NAT,
        "witness_g": {"type": "array", "items": _COUNTED},
        "witness_h": {"type": "array", "items": _COUNTED},
        "d_k": {"type": "array", "items": _COUNTED_PAIR},
        "partition_g": _PARTITION,
        "partition_h": _PARTITION,
        "assignment": {"type": "array", "items": {
            "type": "array", "prefixItems": [_PAIR, {"type": "array", "items": _PAIR}],
            "minItems": 2, "maxItems": 2}},
        "blocks": {"type": "array", "items": {
            "type": "object",
            "required": ["i", "j", "rows", "class"],
            "properties": {
                "i": _NAT, "j": _NAT,
                "rows": {"type": "array", "items": {"type": "string", "pattern": "^[01]*$"}},
                "class": {"type": "array", "items": {"enum": [COLUMNS_HAVE_ONE, ROWS_HAVE_ZERO]},
                          "uniqueItems": True},
            }}},
        "n_sets": _ELEMENT_LISTS,
        "n_bar_sets": _ELEMENT_LISTS,
        "y_sets": _ELEMENT_LISTS,
        "y_bar_sets": _ELEMENT_LISTS,
        "s_sizes": _SIZES,
        "s_bar_sizes": _SIZES,
        "z_sets": {"type": "array", "items": {"type": "array", "items": _COUNTED_PAIR}},
        "z_bar_sets": {"type": "array", "items": {"type": "array", "items": _COUNTED_PAIR}},
        "chain": {"type": "object", "required": ["lhs", "sum_n", "sum_s", "rhs"],
                  "properties": {key: _NAT for key in ("lhs", "sum_n", "sum_s", "rhs")}},
    },
}


def certificate_to_dict(cert: Certificate) -> dict:
    pg = cert.product

    def pair(v):
        return list(pg.pair(v))

    def product_counted(ms):
        return [[pair(v), m] for v, m in ms.items()]

    out = {
        "version": FORMAT_VERSION,
        "k": cert.k,
        "g": {"n": cert.g.n, "edges": [list(e) for e in cert.g.edges()]},
        "h": {"n": cert.h.n, "edges": [list(e) for e in cert.h.edges()]},
        "gamma_g": cert.gamma_g,
        "gamma_h": cert.gamma_h,
        "gamma_gh": cert.gamma_gh,
        "witness_g": [list(x) for x in cert.witness_g.items()],
        "witness_h": [list(x) for x in cert.witness_h.items()],
        "d_k": product_counted(cert.d_k),
        "partition_g": {"anchors": list(cert.partition_g.anchors), "blocks": [list(b) for b in cert.partition_g.blocks]},
        "partition_h": {"anchors": list(cert.partition_h.anchors), "blocks": [list(b) for b in cert.partition_h.blocks]},
        "assignment": [[pair(v), [pair(d) for d in ds]] for v, ds in sorted(cert.assignment.items())],
        "blocks": [{"i": b.i, "j": b.j, "rows": ["".join(map(str, r)) for r in b.entries],
                    "class": sorted(b.classification)} for b in cert.blocks],
        "n_sets": [m.elements() for m in cert.n_sets],
        "n_bar_sets": [m.elements() for m in cert.n_bar_sets],
        "y_sets": [m.elements() for m in cert.y_sets],
        "y_bar_sets": [m.elements() for m in cert.y_bar_sets],
        "s_sizes": list(cert.s_sizes),
        "s_bar_sizes": list(cert.s_bar_sizes),
        "chain": {"lhs": cert.chain.lhs, "sum_n": cert.chain.sum_n, "sum_s": cert.chain.sum_s, "rhs": cert.chain.rhs},
    }
    if cert.z_sets is not None:
        out["z_sets"] = [product_counted(z) for z in cert.z_sets]
    if cert.z_bar_sets is not None:
        out["z_bar_sets"] = [product_counted(z) for z in cert.z_bar_sets]
    return out


def serialize_certificate(cert: Certificate) -> str:
    return json.dumps(certificate_to_dict(cert), separators=(",", ":")) + "\n"


def parse_certificate(text: str) -> Certificate:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CertificateFormatError("$", f"invalid JSON: {exc}") from None
    return certificate_from_dict(data)


def certificate_from_dict(data: dict) -> Certificate:
    validator = jsonschema.Draft202012Validator(SCHEMA)
    errors = sorted(validator.iter_errors(data), key=lambda e: list(e.absolute_path))
    if errors:
        err = errors[0]
        raise CertificateFormatError(err.json_path, err.message)

    def graph(key):
        try:
            return Graph(data[key]["n"], [tuple(e) for e in data[key]["edges"]])
        except GraphError as exc:
            raise CertificateFormatError(f"$.{key}", str(exc)) from None

    g, h = graph("g"), graph("h")
    n_h = h.n

    def vertex(path, x, n):
        if x >= n:
            raise CertificateFormatError(path, f"vertex {x} out of range for n={n}")
        return x

    def product_vertex(path, p):
        return vertex(path + "[0]", p[0], g.n) * n_h + vertex(path + "[1]", p[1], n_h)

    def counted(key, n):
        counts: dict[int, int] = {}
        for idx, (x, m) in enumerate(data[key]):
            x = vertex(f"$.{key}[{idx}][0]", x, n)
            counts[x] = counts.get(x, 0) + m
        return Multiset.from_counts(counts)

    def product_counted(path, items):
        counts: dict[int, int] = {}
        for idx, (p, m) in enumerate(items):
            v = product_vertex(f"{path}[{idx}][0]", p)
            counts[v] = counts.get(v, 0) + m
        return Multiset.from_counts(counts)

    def partition(key, graph_):
        part = data[key]
        for bi, block in enumerate(part["blocks"]):
            for vi, x in enumerate(block):
                vertex(f"$.{key}.blocks[{bi}][{vi}]", x, graph_.n)
        for ai, x in enumerate(part["anchors"]):
            vertex(f"$.{key}.anchors[{ai}]", x, graph_.n)
        return KPartition.from_blocks(data["k"], part["anchors"], part["blocks"], graph_.n)

    def element_lists(key, n):
        out = []
        for si, elems in enumerate(data[key]):
            for ei, x in enumerate(elems):
                vertex(f"$.{key}[{si}][{ei}]", x, n)
            out.append(Multiset(elems))
        return tuple(out)

    assignment: dict[int, tuple[int, ...]] = {}
    for idx, (p, ds) in enumerate(data["assignment"]):
        v = product_vertex(f"$.assignment[{idx}][0]", p)
        if v in assignment:
            raise CertificateFormatError(f"$.assignment[{idx}][0]", f"vertex {p} listed twice")
        assignment[v] = tuple(product_vertex(f"$.assignment[{idx}][1][{di}]", d) for di, d in enumerate(ds))

    blocks = []
    for idx, b in enumerate(data["blocks"]):
        entries = tuple(tuple(int(ch) for ch in row) for row in b["rows"])
        blocks.append(BlockMatrix(b["i"], b["j"], entries, frozenset(b["class"])))

    ch = data["chain"]
    z_sets = z_bar_sets = None
    if "z_sets" in data:
        z_sets = tuple(product_counted(f"$.z_sets[{i}]", z) for i, z in enumerate(data["z_sets"]))
    if "z_bar_sets" in data:
        z_bar_sets = tuple(product_counted(f"$.z_bar_sets[{i}]", z) for i, z in enumerate(data["z_bar_sets"]))

    return Certificate(
        k=data["k"], g=g, h=h,
        gamma_g=data["gamma_g"], gamma_h=data["gamma_h"], gamma_gh=data["gamma_gh"],
        witness_g=counted("witness_g", g.n), witness_h=counted("witness_h", h.n),
        d_k=product_counted("$.d_k", data["d_k"]),
        partition_g=partition("partition_g", g), partition_h=partition("partition_h", h),
        assignment=assignment, blocks=tuple(blocks),
        n_sets=element_lists("n_sets", h.n), n_bar_sets=element_lists("n_bar_sets", g.n),
        y_sets=element_lists("y_sets", h.n), y_bar_sets=element_lists("y_bar_sets", g.n),
        s_sizes=tuple(data["s_sizes"]), s_bar_sizes=tuple(data["s_bar_sizes"]),
        chain=Chain(ch["lhs"], ch["sum_n"], ch["sum_s"], ch["rhs"]),
        z_sets=z_sets, z_bar_sets=z_bar_sets,
    )

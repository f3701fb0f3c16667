"""Exact minimum {k}-dominating multisets.

Two exact routes are provided: :func:`gamma_brute` enumerates every
multiplicity vector in ``{0..k}^n`` and serves as the oracle, and
:func:`gamma_bnb` is a depth-first branch and bound for instances where
enumeration is out of reach.

No optimal solution puts more than ``k`` copies on a vertex: with ``k+1``
copies every closed neighborhood containing it is over-covered, so one copy
could be dropped.  Both searches therefore cap multiplicities at ``k``.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass

from .graph import Graph
from .multiset import Multiset

BRUTE = "brute"
BNB = "bnb"
DEFAULT_BRUTE_CAP = 10**8


class InstanceTooLarge(ValueError):
    """Brute-force search space exceeds the configured cap."""


@dataclass(frozen=True)
class SolveResult:
    gamma: int
    witness: Multiset
    method: str
    nodes_explored: int
    elapsed: float
    k: int
    optimal: bool = True


def is_k_dominating(g: Graph, k: int, d: Multiset) -> bool:
    """Every closed neighborhood holds at least ``k`` copies from ``d``."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    for v in d.support():
        g.closed_neighborhood(v)
    return all(d.count_over_set(g.closed_neighborhood(v)) >= k for v in g.vertices())


def lower_bound(g: Graph, k: int) -> int:
    """``ceil(k*n / (max_degree + 1))``: one copy covers at most that many vertices."""
    if g.n == 0:
        return 0
    return -(-k * g.n // (g.max_degree() + 1))


def greedy_upper(g: Graph, k: int) -> Multiset:
    """Feasible multiset built one copy at a time.

    Each step adds the vertex whose closed neighborhood meets the most
    still-deficient vertices, lowest id on ties.
    """
    _check_k(k)
    closed = [g.closed_neighborhood(v) for v in g.vertices()]
    deficit = [k] * g.n
    counts: dict[int, int] = {}
    remaining = g.n
    while remaining:
        best_v, best_gain = -1, 0
        for v in g.vertices():
            gain = sum(1 for w in closed[v] if deficit[w] > 0)
            if gain > best_gain:
                best_v, best_gain = v, gain
        counts[best_v] = counts.get(best_v, 0) + 1
        for w in closed[best_v]:
            if deficit[w] > 0:
                deficit[w] -= 1
                if deficit[w] == 0:
                    remaining -= 1
    return Multiset.from_counts(counts)


def gamma_brute(g: Graph, k: int, cap: int = DEFAULT_BRUTE_CAP) -> SolveResult:
    """Exhaustive search over ``{0..k}^n`` in lexicographic order.

    Returns the first minimum-cardinality feasible vector met.  Raises
    :class:`InstanceTooLarge` when ``(k+1)**n > cap``.
    """
    _check_k(k)
    n = g.n
    if (k + 1) ** n > cap:
        raise InstanceTooLarge(f"(k+1)^n = {k + 1}^{n} exceeds the cap {cap}; use bnb")
    start = time.perf_counter()
    closed = [sorted(g.closed_neighborhood(v)) for v in range(n)]
    best, best_x, nodes = math.inf, None, 0
    for x in itertools.product(range(k + 1), repeat=n):
        nodes += 1
        size = sum(x)
        if size >= best:
            continue
        if all(sum(x[u] for u in closed[v]) >= k for v in range(n)):
            best, best_x = size, x
    witness = Multiset.from_counts(dict(enumerate(best_x)))
    return SolveResult(len(witness), witness, BRUTE, nodes, time.perf_counter() - start, k)


class _OutOfTime(Exception):
    pass


def gamma_bnb(g: Graph, k: int, time_budget: float | None = None) -> SolveResult:
    """Branch and bound over vertex multiplicities.

    Vertices are fixed in descending-degree order (ties by id), trying the
    larger multiplicity first.  A branch is cut when

    * some vertex can no longer reach ``k`` from its undecided neighbors,
    * or cost plus a residual lower bound reaches the incumbent.

    The residual bound is a feasible dual of the covering LP: each deficient
    vertex ``w`` gets weight ``1 / max c(u)`` over undecided ``u`` in
    ``N[w]``, where ``c(u)`` counts the deficient vertices ``u`` covers.

    With ``time_budget`` (seconds) the best incumbent is returned flagged
    ``optimal=False`` when time runs out.
    """
    _check_k(k)
    start = time.perf_counter()
    n = g.n
    incumbent = greedy_upper(g, k)
    if n == 0:
        return SolveResult(0, incumbent, BNB, 0, 0.0, k)

    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    closed = [tuple(sorted(g.closed_neighborhood(v))) for v in range(n)]
    decided = [False] * n
    cov = [0] * n
    undec = [len(c) for c in closed]
    x = [0] * n

    state = {
        "best": len(incumbent),
        "best_x": None,
        "nodes": 0,
        "unsat": n,  # vertices with cov < k
    }
    deadline = None if time_budget is None else start + time_budget

    def residual_bound() -> float:
        c = {}
        for u in range(n):
            if not decided[u]:
                c[u] = sum(1 for w in closed[u] if cov[w] < k)
        total = 0.0
        for w in range(n):
            d = k - cov[w]
            if d > 0:
                m = max(c[u] for u in closed[w] if not decided[u])
                total += d / m
        return total

    def search(pos: int, cost: int) -> None:
        state["nodes"] += 1
        if deadline is not None and state["nodes"] & 1023 == 0 and time.perf_counter() > deadline:
            raise _OutOfTime
        if state["unsat"] == 0:
            if cost < state["best"]:
                state["best"] = cost
                state["best_x"] = list(x)
            return
        if pos == n:
            return
        best = state["best"]
        if cost + math.ceil(residual_bound() - 1e-9) >= best:
            return
        v = order[pos]
        lo = hi = 0
        for w in closed[v]:
            d = k - cov[w]
            if d > 0:
                if d > hi:
                    hi = d
                need = d - k * (undec[w] - 1)
                if need > lo:
                    lo = need
        if cost + lo >= best:
            return
        decided[v] = True
        for w in closed[v]:
            undec[w] -= 1
        for val in range(hi, lo - 1, -1):
            if cost + val >= state["best"]:
                continue
            x[v] = val
            if val:
                for w in closed[v]:
                    before = cov[w]
                    cov[w] = before + val
                    if before < k <= before + val:
                        state["unsat"] -= 1
            search(pos + 1, cost + val)
            if val:
                for w in closed[v]:
                    after = cov[w]
                    cov[w] = after - val
                    if after - val < k <= after:
                        state["unsat"] += 1
        x[v] = 0
        for w in closed[v]:
            undec[w] += 1
        decided[v] = False

    optimal = True
    try:
        search(0, 0)
    except _OutOfTime:
        optimal = False
    if state["best_x"] is None:
        witness = incumbent
    else:
        witness = Multiset.from_counts(dict(enumerate(state["best_x"])))
    return SolveResult(len(witness), witness, BNB, state["nodes"], time.perf_counter() - start, k, optimal)


def solve(g: Graph, k: int, method: str = BNB, **kwargs) -> SolveResult:
    if method == BRUTE:
        return gamma_brute(g, k, **kwargs)
    if method == BNB:
        return gamma_bnb(g, k, **kwargs)
    raise ValueError(f"unknown method {method!r}")


def _check_k(k: int) -> None:
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")

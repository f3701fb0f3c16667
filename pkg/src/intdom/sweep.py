"""Sweeps over pairs of small graphs, one CSV row per (G, H, k)."""

from __future__ import annotations

import csv
import io
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator

from . import graph as gr
from .certificate import build_certificate, verify_certificate
from .product import cartesian_product
from .solver import SolveResult, gamma_bnb

COLUMNS = ["family_g", "params_g", "family_h", "params_h", "k", "gamma_g", "gamma_h",
           "gamma_product", "lhs", "rhs", "ratio", "cert_ok", "millis"]
SWEEP_FAMILIES = ("path", "cycle", "complete", "star", "grid", "random")


@dataclass(frozen=True)
class NamedGraph:
    family: str
    params: str
    graph: gr.Graph


@dataclass(frozen=True)
class SweepRow:
    family_g: str
    params_g: str
    family_h: str
    params_h: str
    k: int
    gamma_g: int
    gamma_h: int
    gamma_product: int
    lhs: int
    rhs: int
    ratio: Fraction
    cert_ok: bool
    optimal: bool
    millis: float

    def csv_fields(self, timing: bool) -> list[str]:
        return [
            self.family_g, self.params_g, self.family_h, self.params_h, str(self.k),
            str(self.gamma_g), str(self.gamma_h), str(self.gamma_product), str(self.lhs), str(self.rhs),
            format_ratio(self.ratio), "true" if self.cert_ok else "false",
            f"{self.millis:.0f}" if timing else "",
        ]


def format_ratio(r: Fraction) -> str:
    """Exact ``p/q`` followed by a 6-decimal float, e.g. ``1/4 (0.250000)``."""
    return f"{r.numerator}/{r.denominator} ({float(r):.6f})"


def family_graphs(families: Iterable[str], n_max: int, seed: int = 0, random_count: int = 0,
                  random_n_max: int | None = None, random_p: tuple[float, ...] = (0.3, 0.6)) -> list[NamedGraph]:
    """Graphs of each family up to ``n_max`` vertices, in a fixed order.

    Random graphs draw their size and 64-bit seed from ``random.Random(seed)``
    and cycle through ``random_p``.
    """
    out = []
    for fam in families:
        if fam == "path":
            out += [NamedGraph(fam, f"n={n}", gr.path(n)) for n in range(1, n_max + 1)]
        elif fam == "cycle":
            out += [NamedGraph(fam, f"n={n}", gr.cycle(n)) for n in range(3, n_max + 1)]
        elif fam == "complete":
            out += [NamedGraph(fam, f"n={n}", gr.complete(n)) for n in range(1, n_max + 1)]
        elif fam == "star":
            out += [NamedGraph(fam, f"n={n}", gr.star(n)) for n in range(1, n_max + 1)]
        elif fam == "grid":
            out += [NamedGraph(fam, f"rows={r};cols={c}", gr.grid(r, c))
                    for r in range(2, n_max + 1) for c in range(r, n_max + 1) if r * c <= n_max]
        elif fam == "random":
            rng = random.Random(seed)
            top = n_max if random_n_max is None else random_n_max
            for idx in range(random_count):
                n = rng.randint(1, top)
                p = random_p[idx % len(random_p)]
                s = rng.getrandbits(64)
                out.append(NamedGraph(fam, f"n={n};p={p};seed={s}", gr.random_gnp(n, p, s)))
        else:
            raise ValueError(f"unknown sweep family {fam!r}; choose from {', '.join(SWEEP_FAMILIES)}")
    return out


@lru_cache(maxsize=None)
def _solve(g: gr.Graph, k: int, budget: float | None) -> SolveResult:
    return gamma_bnb(g, k, time_budget=budget)


def run_instance(g: NamedGraph, h: NamedGraph, k: int, budget: float | None = None) -> SweepRow:
    start = time.perf_counter()
    sg, sh = _solve(g.graph, k, budget), _solve(h.graph, k, budget)
    sgh = _solve(cartesian_product(g.graph, h.graph).graph, k, budget)
    optimal = sg.optimal and sh.optimal and sgh.optimal
    cert_ok = False
    if optimal:
        cert = build_certificate(g.graph, h.graph, k, sg, sh, sgh)
        cert_ok = verify_certificate(cert).ok
    lhs, rhs = sg.gamma * sh.gamma, 2 * k * sgh.gamma
    return SweepRow(g.family, g.params, h.family, h.params, k, sg.gamma, sh.gamma, sgh.gamma,
                    lhs, rhs, Fraction(lhs, rhs), cert_ok, optimal, 1000 * (time.perf_counter() - start))


def _run_packed(args) -> SweepRow:
    return run_instance(*args)


def instances(graphs: list[NamedGraph], k_max: int) -> list[tuple[NamedGraph, NamedGraph, int]]:
    return [(g, h, k) for g in graphs for h in graphs for k in range(1, k_max + 1)]


def iter_rows(tasks: list[tuple[NamedGraph, NamedGraph, int]], budget: float | None = None,
              jobs: int = 1) -> Iterator[SweepRow]:
    """Rows in task order, whatever the number of workers."""
    packed = [(g, h, k, budget) for g, h, k in tasks]
    if jobs <= 1:
        yield from map(_run_packed, packed)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        yield from pool.map(_run_packed, packed, chunksize=4)


def rows_to_csv(rows: Iterable[SweepRow], timing: bool = False) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(COLUMNS)
    for row in rows:
        w.writerow(row.csv_fields(timing))
    return buf.getvalue()

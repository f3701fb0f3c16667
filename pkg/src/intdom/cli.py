"""Command-line front end.

Exit codes: 0 success, 2 unreadable or malformed input, 3 solve budget
exhausted, 4 certificate verification failed, 5 a sweep row broke the bound.
"""

from __future__ import annotations

import argparse
import csv
import sys
import time

from .certificate import (CertificateFormatError, build_certificate, parse_certificate,
                          serialize_certificate, verify_certificate)
from .graph import GraphError, read_edge_list
from .product import cartesian_product
from .solver import BNB, BRUTE, InstanceTooLarge, solve
from .sweep import COLUMNS, family_graphs, instances, iter_rows

EXIT_OK, EXIT_INPUT, EXIT_BUDGET, EXIT_VERIFY, EXIT_BOUND = 0, 2, 3, 4, 5
DEFAULT_INSTANCE_BUDGET = 60.0


def _err(msg: str) -> None:
    print(f"error: {msg}", file=sys.stderr)


def _load(path: str):
    try:
        return read_edge_list(path)
    except OSError as exc:
        _err(f"cannot read {path}: {exc.strerror or exc}")
    except GraphError as exc:
        _err(f"{path}: {exc}")
    return None


def cmd_solve(args) -> int:
    g = _load(args.graph)
    if g is None:
        return EXIT_INPUT
    try:
        if args.method == BRUTE:
            res = solve(g, args.k, BRUTE)
        else:
            res = solve(g, args.k, BNB, time_budget=args.budget)
    except InstanceTooLarge as exc:
        _err(str(exc))
        return EXIT_BUDGET
    print(f"gamma={res.gamma}")
    if args.witness:
        print(f"witness={res.witness}")
    print(f"method={res.method} nodes={res.nodes_explored} optimal={'true' if res.optimal else 'false'}")
    return EXIT_OK if res.optimal else EXIT_BUDGET


def cmd_verify(args) -> int:
    g, h = _load(args.g), _load(args.h)
    if g is None or h is None:
        return EXIT_INPUT
    pg = cartesian_product(g, h)
    results = [solve(x, args.k, BNB, time_budget=args.budget) for x in (g, h, pg.graph)]
    for name, res in zip(("G", "H", "GxH"), results):
        print(f"gamma_{name}={res.gamma}{'' if res.optimal else ' (not optimal: budget exhausted)'}")
    if not all(r.optimal for r in results):
        return EXIT_BUDGET
    cert = build_certificate(g, h, args.k, *results)
    report = verify_certificate(cert)
    for line in report.lines():
        print(line)
    ch = cert.chain
    print(f"chain: {ch.lhs} <= {ch.sum_n} <= {ch.sum_s} = {ch.rhs}")
    if args.cert:
        with open(args.cert, "w", encoding="utf-8") as fh:
            fh.write(serialize_certificate(cert))
    return EXIT_OK if report.ok else EXIT_VERIFY


def cmd_check_cert(args) -> int:
    try:
        with open(args.cert, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        _err(f"cannot read {args.cert}: {exc.strerror or exc}")
        return EXIT_INPUT
    try:
        cert = parse_certificate(text)
    except CertificateFormatError as exc:
        _err(f"malformed certificate: {exc}")
        return EXIT_INPUT
    report = verify_certificate(cert)
    for line in report.lines():
        print(line)
    return EXIT_OK if report.ok else EXIT_VERIFY


def _float_list(text: str) -> tuple[float, ...]:
    return tuple(float(x) for x in text.split(",") if x.strip())


def cmd_sweep(args) -> int:
    families = [f.strip() for f in args.families.split(",") if f.strip()]
    if not families:
        _err("empty family list")
        return EXIT_INPUT
    try:
        graphs = family_graphs(families, args.n_max, seed=args.seed, random_count=args.random_count,
                               random_n_max=args.random_n_max, random_p=_float_list(args.random_p))
    except (ValueError, GraphError) as exc:
        _err(str(exc))
        return EXIT_INPUT
    if not graphs:
        _err("the family list yields no graphs")
        return EXIT_INPUT
    tasks = instances(graphs, args.k_max)
    start = time.perf_counter()
    status = EXIT_OK
    with open(args.out, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(COLUMNS)
        for row in iter_rows(tasks, budget=args.instance_budget, jobs=args.jobs):
            writer.writerow(row.csv_fields(args.timing))
            if not row.optimal:
                status = EXIT_BUDGET
            if row.optimal and row.ratio > 1:
                fh.write("# aborted: ratio above 1\n")
                _err(f"bound violated on {row.family_g}({row.params_g}) x {row.family_h}({row.params_h}) k={row.k}")
                return EXIT_BOUND
            if args.budget is not None and time.perf_counter() - start > args.budget:
                fh.write("# incomplete: cumulative budget exhausted\n")
                _err("cumulative budget exhausted; partial CSV written")
                return EXIT_BUDGET
    print(f"{len(tasks)} instances written to {args.out}")
    return status


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="intdom", description="Integer domination in Cartesian products")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="compute gamma_k of one graph")
    s.add_argument("--graph", required=True, help="edge-list file")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--method", choices=[BRUTE, BNB], default=BNB)
    s.add_argument("--witness", action="store_true", help="also print an optimal multiset")
    s.add_argument("--budget", type=float, default=DEFAULT_INSTANCE_BUDGET, help="seconds for bnb")
    s.set_defaults(func=cmd_solve)

    v = sub.add_parser("verify", help="solve G, H, GxH and verify the certificate")
    v.add_argument("--g", required=True)
    v.add_argument("--h", required=True)
    v.add_argument("--k", type=int, required=True)
    v.add_argument("--cert", help="write the certificate JSON here")
    v.add_argument("--budget", type=float, default=DEFAULT_INSTANCE_BUDGET, help="seconds per solve")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("check-cert", help="verify a certificate file without solving")
    c.add_argument("cert")
    c.set_defaults(func=cmd_check_cert)

    w = sub.add_parser("sweep", help="check the bound over pairs of graph families")
    w.add_argument("--families", required=True, help="comma list of path,cycle,complete,star,grid,random")
    w.add_argument("--n-max", type=int, required=True)
    w.add_argument("--k-max", type=int, required=True)
    w.add_argument("--seed", type=int, default=0)
    w.add_argument("--random-count", type=int, default=0)
    w.add_argument("--random-n-max", type=int, default=None, help="defaults to --n-max")
    w.add_argument("--random-p", default="0.3,0.6", help="edge probabilities, cycled")
    w.add_argument("--out", required=True)
    w.add_argument("--jobs", type=int, default=1)
    w.add_argument("--instance-budget", type=float, default=DEFAULT_INSTANCE_BUDGET, help="seconds per solve")
    w.add_argument("--budget", type=float, default=None, help="cumulative seconds")
    w.add_argument("--timing", action="store_true", help="fill the millis column (output no longer reproducible)")
    w.set_defaults(func=cmd_sweep)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "k", None) is not None and args.k < 1:
        _err("k must be at least 1")
        return EXIT_INPUT
    if getattr(args, "k_max", None) is not None and args.k_max < 1:
        _err("--k-max must be at least 1")
        return EXIT_INPUT
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

"""Command line front end.

Exit codes: 0 success, 1 verification failure, 2 bad input or infeasible
request, 3 enumeration budget exceeded (re-run with --override-budget).
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from . import cache, enumeration, graph6
from .agindex import ag_value
from .bounds import (EXCEPTIONAL_VALUES, canonical_quadruplet,
                     connected_size_range, sharp_bound, upper_bound)
from .constructor import construct_with_plan
from .errors import AgxError, BudgetExceeded
from .graphs import census
from .transforms import local_search
from .verify import (CHEMICAL_COUNTS, EXTREMAL_COUNT_CELLS, run_all)

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _read_graphs(args):
    if args.graph:
        lines = args.graph
    else:
        lines = [ln.strip() for ln in sys.stdin if ln.strip()]
    return [graph6.decode(ln) for ln in lines]


def _emit_rows(rows, header, fmt, out=None):
    out = out or sys.stdout
    if fmt == "csv":
        writer = csv.writer(out)
        writer.writerow(header)
        writer.writerows(rows)
    elif fmt == "json":
        json.dump([dict(zip(header, row)) for row in rows], out, indent=2)
        out.write("\n")
    else:
        for row in rows:
            out.write(" ".join(str(x) for x in row) + "\n")


def _cmd_ag(args) -> int:
    graphs = _read_graphs(args)
    for g in graphs:
        val = ag_value(g)
        if args.format == "json":
            payload = {"graph6": graph6.encode(g), "n": g.n, "m": g.m,
                       "ag": val.to_json()}
            print(json.dumps(payload))
        elif args.exact:
            print(f"{graph6.encode(g)} {val} = {float(val):.4f}")
        else:
            print(f"{float(val):.4f}")
    return EXIT_OK


def _cmd_bound(args) -> int:
    report = sharp_bound(args.n, args.m)
    if args.format == "json":
        print(json.dumps(report.to_json(), indent=2))
    else:
        print(f"UB({args.n},{args.m}) = {report.ub} = {float(report.ub):.4f}")
        if report.exceptional:
            print(f"exceptional pair; sharp value = {report.sharp} "
                  f"= {float(report.sharp):.4f}")
        else:
            print("bound is attained (sharp)")
    return EXIT_OK


def _cmd_construct(args) -> int:
    g, plan = construct_with_plan(args.n, args.m)
    text = graph6.encode(g)
    if args.format == "graph6":
        print(text)
        return EXIT_OK
    val = ag_value(g)
    payload = {
        "graph6": text,
        "n": g.n,
        "m": g.m,
        "quadruplet": list(census(g).quadruplet),
        "ag": val.to_json(),
        "ub": upper_bound(args.n, args.m).to_json(),
        "plan": plan.to_json(),
    }
    print(json.dumps(payload, indent=2))
    return EXIT_OK


def _graph_rows(graphs, fmt):
    if fmt == "graph6":
        for g in graphs:
            print(graph6.encode(g))
        return
    rows = [(graph6.encode(g), g.n, g.m, f"{float(ag_value(g)):.4f}")
            for g in graphs]
    _emit_rows(rows, ("graph6", "n", "m", "ag"), fmt)


def _cmd_enumerate(args) -> int:
    spec = enumeration.EnumSpec(args.n, args.m, args.connectivity, args.target)
    if args.target == "gnm":
        graphs = enumeration.enumerate_Gnm(
            args.n, args.m, args.connectivity,
            override_budget=args.override_budget)
    else:
        graphs = enumeration.enumerate_chemical(
            spec, override_budget=args.override_budget,
            use_cache=not args.no_cache)
    _graph_rows(graphs, args.format)
    return EXIT_OK


def _cmd_count(args) -> int:
    conn, nonconn = enumeration.extremal_counts(
        args.n, args.m, override_budget=args.override_budget)
    _emit_rows([(args.n, args.m, conn, nonconn)],
               ("n", "m", "connected", "nonconnected"), args.format)
    return EXIT_OK


def _table1_rows():
    for (n, m) in sorted(CHEMICAL_COUNTS):
        yield n, m, len(enumeration.enumerate_chemical(enumeration.EnumSpec(n, m)))


def _table2_rows():
    for (n, m), val in sorted(EXCEPTIONAL_VALUES.items()):
        gap = sharp_bound(n, m).ub - val
        yield n, m, f"{float(val):.4f}", f"{float(gap):.4f}"


def _table3_rows(max_n):
    for n in range(1, max_n + 1):
        lo, hi = connected_size_range(n)
        for m in range(max(lo, 0), hi + 1):
            conn, nonconn = enumeration.extremal_counts(n, m)
            yield n, m, conn, nonconn


def _cmd_tables(args) -> int:
    fmt = args.format if args.format != "graph6" else "csv"
    if args.which == 1:
        _emit_rows(_table1_rows(), ("n", "m", "count"), fmt)
    elif args.which == 2:
        _emit_rows(_table2_rows(), ("n", "m", "sharp", "gap"), fmt)
    else:
        _emit_rows(_table3_rows(args.max_n),
                   ("n", "m", "connected", "nonconnected"), fmt)
    return EXIT_OK


def _cmd_catalog(args) -> int:
    records = enumeration.derive_exception_catalog(use_cache=not args.no_cache)
    payload = [{
        "n": rec.pair[0],
        "m": rec.pair[1],
        "graph6": graph6.encode(rec.graph),
        "ag": rec.ag.to_json(),
    } for rec in records.values()]
    print(json.dumps(payload, indent=2))
    return EXIT_OK


def _cmd_improve(args) -> int:
    graphs = _read_graphs(args)
    for g in graphs:
        trace = [] if args.trace else None
        improved = local_search(g, trace=trace)
        if args.trace:
            for move in trace:
                print(f"# {move.kind.value}: -{sorted(move.remove)} "
                      f"+{sorted(move.add)}")
        val = ag_value(improved)
        print(f"{graph6.encode(improved)} {float(val):.4f}")
    return EXIT_OK


def _cmd_verify(args) -> int:
    results = run_all(max_n=args.max_n, extended=args.extended)
    failed = False
    for res in results:
        status = "PASS" if res.ok else "FAIL"
        line = f"[{status}] {res.name}"
        if res.detail:
            line += f": {res.detail}"
        print(line)
        failed = failed or not res.ok
    return EXIT_VERIFY if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="agx",
        description="Arithmetic-geometric index of chemical graphs: exact "
                    "values, sharp bounds, extremal constructions and "
                    "exhaustive enumeration.")
    parser.add_argument("--cache-dir", help="graph cache directory "
                        "(default $AGX_CACHE or ./.agx-cache)")
    parser.add_argument("--threads", type=int,
                        help="worker processes for enumeration "
                             "(default $AGX_THREADS or 1)")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_nm(p):
        p.add_argument("-n", type=int, required=True, help="number of vertices")
        p.add_argument("-m", type=int, required=True, help="number of edges")

    def add_fmt(p, default="text", choices=("text", "csv", "json")):
        p.add_argument("--format", choices=choices, default=default)

    p = sub.add_parser("ag", help="compute the AG index of graphs")
    p.add_argument("graph", nargs="*", help="graph6 strings (default: stdin)")
    p.add_argument("--exact", action="store_true",
                   help="print the exact value, not just a 4-decimal float")
    add_fmt(p)
    p.set_defaults(func=_cmd_ag)

    p = sub.add_parser("bound", help="sharp upper bound for order n, size m")
    add_nm(p)
    add_fmt(p)
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("construct",
                       help="build a connected extremal graph for (n, m)")
    add_nm(p)
    add_fmt(p, default="json", choices=("graph6", "json"))
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("enumerate", help="list chemical or extremal-family "
                                         "graphs of order n, size m")
    add_nm(p)
    p.add_argument("--target", choices=("chemical", "gnm"), default="chemical")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--connected", dest="connectivity",
                       action="store_const", const="connected")
    group.add_argument("--disconnected", dest="connectivity",
                       action="store_const", const="disconnected")
    group.add_argument("--all", dest="connectivity",
                       action="store_const", const="all")
    p.set_defaults(connectivity="all")
    p.add_argument("--override-budget", action="store_true")
    p.add_argument("--no-cache", action="store_true")
    add_fmt(p, default="graph6", choices=("graph6", "csv", "json"))
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("count", help="count extremal graphs of order n, size m")
    add_nm(p)
    p.add_argument("--override-budget", action="store_true")
    add_fmt(p, default="csv", choices=("text", "csv", "json"))
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("tables", help="reproduce the published tables")
    p.add_argument("--which", type=int, choices=(1, 2, 3), required=True)
    p.add_argument("--max-n", type=int, default=10,
                   help="largest order for table 3 (default 10)")
    add_fmt(p, default="csv", choices=("csv", "json"))
    p.set_defaults(func=_cmd_tables)

    p = sub.add_parser("catalog",
                       help="derive the 22 exceptional extremal graphs")
    p.add_argument("--no-cache", action="store_true")
    p.set_defaults(func=_cmd_catalog)

    p = sub.add_parser("improve", help="AG-increasing local search on graphs")
    p.add_argument("graph", nargs="*", help="graph6 strings (default: stdin)")
    p.add_argument("--trace", action="store_true",
                   help="print each applied move")
    p.set_defaults(func=_cmd_improve)

    p = sub.add_parser("verify", help="run the full verification sweep")
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--extended", action="store_true",
                   help="include the long (14,28) extremal count")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.cache_dir:
        cache.set_cache_dir(args.cache_dir)
    workers = args.threads
    if workers is None:
        env = os.environ.get("AGX_THREADS")
        workers = int(env) if env else None
    if workers is not None:
        enumeration.set_workers(workers)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except AgxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

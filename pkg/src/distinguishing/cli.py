"""Command-line interface.

Exit codes: 0 success, 1 theorem violation, 2 parse error or bad flags,
3 unsupported graph class, 4 oracle disagreement, 5 oracle budget
exhausted, 6 I/O error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Optional

from . import oracle
from .enumeration import (MAX_TREE_ORDER, MAX_UNICYCLIC_ORDER, GeneratorConfig, bicentric_only,
                          in_T_only, instances)
from .graph import Graph, GraphFormatError, NotSupportedError, format_graph, parse_graph
from .report import Report, checked, classify_graph
from .tree_dist import classify_tree
from .trees import root_at
from .unicyclic import classify_unicyclic

EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_UNSUPPORTED = 3
EXIT_ORACLE = 4
EXIT_BUDGET = 5
EXIT_IO = 6

JOBS_ENV = "DISTINGUISHING_JOBS"


class CliError(Exception):
    def __init__(self, code: int, message: str):
        self.code = code
        super().__init__(message)


def _log(msg: str) -> None:
    print(msg, file=sys.stderr)


def _read_graph(path: str) -> Graph:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise CliError(EXIT_IO, f"cannot read {path}: {exc}") from None
    try:
        return parse_graph(text)
    except GraphFormatError as exc:
        raise CliError(EXIT_USAGE, f"{path}: {exc}") from None


def _default_jobs() -> int:
    try:
        return max(1, int(os.environ.get(JOBS_ENV, "1")))
    except ValueError:
        return 1


def _fan_out(fn: Callable, items: Iterable, jobs: int) -> Iterable:
    """Map preserving input order, in worker processes when ``jobs > 1``."""
    if jobs <= 1:
        yield from map(fn, items)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        yield from pool.map(fn, items, chunksize=16)


# -- compute -----------------------------------------------------------------

def cmd_compute(args) -> int:
    g = _read_graph(args.path)
    try:
        report = classify_graph(g)
    except NotSupportedError as exc:
        raise CliError(EXIT_UNSUPPORTED, str(exc)) from None
    if args.oracle:
        report, problems = checked(g, report)
        if problems:
            for p in problems:
                _log(f"oracle disagreement: {p}")
            print(report.to_json(args.witness))
            return EXIT_ORACLE
    print(report.to_json(args.witness))
    return 0


# -- verify ------------------------------------------------------------------

def _verify_tree(job: tuple[Graph, bool]) -> list[str]:
    g, use_oracle = job
    out = []
    r = classify_tree(g)
    if r.Dprime > r.D + 1:
        out.append(f"bound D' <= D + 1 fails: D={r.D}, D'={r.Dprime}")
    if (r.Dprime == r.D + 1) != r.in_family_T:
        out.append(f"theorem 1 fails: D={r.D}, D'={r.Dprime}, in family={r.in_family_T}")
    if use_oracle:
        out += _oracle_problems(g, r)
    return out


def _verify_unicyclic(job: tuple[Graph, bool]) -> list[str]:
    g, use_oracle = job
    out = []
    r = classify_unicyclic(g)
    if r.D != r.Dprime:
        out.append(f"theorem 2 fails: D={r.D}, D'={r.Dprime}")
    if r.Dprime > r.D + 1:
        out.append(f"bound D' <= D + 1 fails: D={r.D}, D'={r.Dprime}")
    if use_oracle:
        out += _oracle_problems(g, r)
    return out


def _oracle_problems(g: Graph, r) -> list[str]:
    bd, bdp = oracle.brute_D(g), oracle.brute_Dprime(g)
    out = []
    if (bd, bdp) != (r.D, r.Dprime):
        out.append(f"oracle disagrees: fast (D, D')=({r.D}, {r.Dprime}), brute force ({bd}, {bdp})")
    if not oracle.is_distinguishing(g, r.witness_vertex):
        out.append("vertex witness is not distinguishing")
    if not oracle.is_distinguishing(g, r.witness_edge):
        out.append("edge witness is not distinguishing")
    return out


def cmd_verify(args) -> int:
    if args.max_n < 3:
        raise CliError(EXIT_USAGE, "order at least 3 required")
    family = "tree" if args.theorem == 1 else "unicyclic"
    bound = MAX_TREE_ORDER if family == "tree" else MAX_UNICYCLIC_ORDER
    if args.max_n > bound:
        raise CliError(EXIT_USAGE, f"--max-n above {bound} is out of range for theorem {args.theorem}")
    check = _verify_tree if family == "tree" else _verify_unicyclic
    start = time.perf_counter()
    graphs = list(instances(family, 3, args.max_n))
    jobs = [(g, g.n <= args.oracle_max_n) for g in graphs]
    violations = []
    per_n: dict[int, int] = {}
    try:
        for g, problems in zip(graphs, _fan_out(check, jobs, args.jobs)):
            per_n[g.n] = per_n.get(g.n, 0) + 1
            if problems:
                violations.append({"problems": problems, "graph": format_graph(g)})
    except oracle.OracleBudgetExceeded as exc:
        raise CliError(EXIT_BUDGET, f"oracle budget exhausted: {exc}") from None
    elapsed = time.perf_counter() - start
    oracle_count = sum(1 for _, use in jobs if use)
    for v in violations:
        _log("VIOLATION: " + "; ".join(v["problems"]))
        _log(v["graph"].rstrip())
    _log(f"theorem {args.theorem}: {len(graphs)} instances (n = 3..{args.max_n}), "
         f"{oracle_count} oracle-checked, {len(violations)} violations, {elapsed:.1f}s")
    print(json.dumps({
        "theorem": args.theorem,
        "instances": len(graphs),
        "instances_by_n": {str(n): c for n, c in sorted(per_n.items())},
        "oracle_checked": oracle_count,
        "violations": len(violations),
        "failures": violations,
        "seconds": round(elapsed, 3),
    }))
    return EXIT_VIOLATION if violations else 0


# -- census ------------------------------------------------------------------

FILTERS = {"in-T": in_T_only, "bicentric": bicentric_only}


def _census_one(job: tuple[Graph, bool]) -> tuple[Report, list[str]]:
    g, use_oracle = job
    report = classify_graph(g)
    if use_oracle:
        return checked(g, report)
    return report, []


def cmd_census(args) -> int:
    bound = MAX_TREE_ORDER if args.family == "tree" else MAX_UNICYCLIC_ORDER
    if not 1 <= args.max_n <= bound:
        raise CliError(EXIT_USAGE, f"--max-n must be in 1..{bound} for {args.family}")
    config = GeneratorConfig(max_n=args.max_n, family=args.family,
                             filters=[FILTERS[f] for f in args.filter],
                             oracle_max_n=args.oracle_max_n)
    graphs = list(instances(config.family, config.min_n, config.max_n))
    jobs = [(g, g.n <= config.oracle_max_n) for g in graphs]
    lines = []
    try:
        for g, (report, problems) in zip(graphs, _fan_out(_census_one, jobs, args.jobs)):
            if problems:
                _log(f"oracle disagreement: {problems}\n{format_graph(g)}")
                return EXIT_ORACLE
            if all(f(g, report) for f in config.filters):
                lines.append(report.to_json())
    except oracle.OracleBudgetExceeded as exc:
        raise CliError(EXIT_BUDGET, f"oracle budget exhausted: {exc}") from None
    text = "".join(line + "\n" for line in lines)
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            raise CliError(EXIT_IO, f"cannot write {args.out}: {exc}") from None
    else:
        sys.stdout.write(text)
    _log(f"census: {len(graphs)} {args.family} instances, {len(lines)} reports written")
    return 0


# -- oracle ------------------------------------------------------------------

def cmd_oracle(args) -> int:
    g = _read_graph(args.path)
    try:
        if args.what == "aut":
            auts = oracle.automorphisms(g, max_group=args.max_group)
            out = {"order": len(auts)}
            if args.list:
                out["automorphisms"] = [list(p.image) for p in auts]
        elif args.what == "D":
            out = {"D": oracle.brute_D(g, budget=args.budget)}
        elif args.what == "Dprime":
            out = {"Dprime": oracle.brute_Dprime(g, budget=args.budget)}
        else:
            if args.k is None:
                raise CliError(EXIT_USAGE, "classes needs --k")
            if not 0 <= args.root < g.n:
                raise CliError(EXIT_USAGE, f"--root must be a vertex of the graph")
            r = root_at(g, args.root)
            out = {"root": args.root, "k": args.k,
                   "classes": oracle.brute_class_count(r, args.k, budget=args.budget)}
    except oracle.OracleBudgetExceeded as exc:
        raise CliError(EXIT_BUDGET, f"oracle budget exhausted: {exc}") from None
    except NotSupportedError as exc:
        raise CliError(EXIT_UNSUPPORTED, str(exc)) from None
    print(json.dumps(out))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="distinguish",
        description="Distinguishing number and index of trees and unicyclic graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="classify one graph given as an edge list")
    p.add_argument("path")
    p.add_argument("--oracle", action="store_true", help="cross-check with brute force")
    p.add_argument("--witness", action="store_true", help="include witness labelings")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="exhaustively check a theorem up to an order")
    p.add_argument("--theorem", type=int, choices=(1, 2), required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--oracle-max-n", type=int, default=0)
    p.add_argument("--jobs", type=int, default=_default_jobs())
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("census", help="write one JSON report per generated graph")
    p.add_argument("--family", choices=("tree", "unicyclic"), required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--filter", action="append", choices=sorted(FILTERS), default=[])
    p.add_argument("--oracle-max-n", type=int, default=0)
    p.add_argument("--out")
    p.add_argument("--jobs", type=int, default=_default_jobs())
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("oracle", help="brute-force reference values")
    p.add_argument("what", choices=("aut", "D", "Dprime", "classes"))
    p.add_argument("path")
    p.add_argument("--root", type=int, default=0)
    p.add_argument("--k", type=int)
    p.add_argument("--list", action="store_true", help="list the automorphisms")
    p.add_argument("--budget", type=int, default=oracle.DEFAULT_BUDGET)
    p.add_argument("--max-group", type=int, default=1_000_000)
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        _log(f"error: {exc}")
        return exc.code


if __name__ == "__main__":
    sys.exit(main())

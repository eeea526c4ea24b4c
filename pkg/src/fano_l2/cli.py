"""Command-line entry point.

Subcommands: norm (p-norm of a stored graph), check (pattern detectors),
gen (write a construction to a file), bounds (CSV tables of the analytic
bounds), search (the brute-force oracles), verify (named check suites).
Exit codes: 0 success or pattern absent, 1 pattern found or failed check,
2 usage or parse errors.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from pathlib import Path

from .bounds import ak_s2_bound, f_of, prop23_bound
from .formats import (
    FormatError,
    parse_any,
    write_3graph,
    write_graph,
    write_mgraph,
)
from .graphs import SimpleGraph, clique_plus_isolated, complete_minus_clique, complete_split_plus_isolated
from .hypergraphs import Uniform3Graph, balanced_bipartite3, bn_l2_closed, complete3
from .multigraphs import MMultigraph, bipartite_construction_5, contains_k4, turan_layers_5
from .patterns import contains_fano, contains_k53, is_bipartite3
from .verify import report_to_json, run_suite


def _load(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc
    return parse_any(text)


def _cmd_norm(args) -> int:
    obj = _load(args.file)
    p = args.p
    if isinstance(obj, Uniform3Graph):
        print(f"norm_{p}: {obj.lp_norm(p)}")
        if p == 2:
            degrees = [obj.lp_norm_degree(v, 2) for v in range(obj.n)]
            print(f"two_edge_stars: {obj.count_stars(2)}")
            print(
                f"l2_degree min/max/total: {min(degrees, default=0)} "
                f"{max(degrees, default=0)} {sum(degrees)}"
            )
    elif isinstance(obj, SimpleGraph):
        print(f"degree_power_sum_{p}: {obj.norm_p(p)}")
        if p == 2:
            print(f"two_edge_stars: {obj.star_count(2)}")
    else:
        print("norm is defined for 3graph and graph files", file=sys.stderr)
        return 2
    return 0


def _cmd_check(args) -> int:
    obj = _load(args.file)
    pattern = args.pattern
    if pattern in ("fano", "k53"):
        if not isinstance(obj, Uniform3Graph):
            print(f"pattern {pattern} needs a 3graph file", file=sys.stderr)
            return 2
        witness = contains_fano(obj) if pattern == "fano" else contains_k53(obj)
        if witness is None:
            print(f"{pattern}: absent")
            return 0
        print(f"{pattern}: found at vertices {' '.join(map(str, witness))}")
        return 1
    if pattern == "bipartite3":
        if not isinstance(obj, Uniform3Graph):
            print("pattern bipartite3 needs a 3graph file", file=sys.stderr)
            return 2
        parts = is_bipartite3(obj)
        if parts is not None:
            print(f"bipartite3: holds with parts {list(parts[0])} | {list(parts[1])}")
            return 0
        print("bipartite3: fails")
        return 1
    if pattern == "k4multi":
        if not isinstance(obj, MMultigraph):
            print("pattern k4multi needs an mgraph file", file=sys.stderr)
            return 2
        witness = contains_k4(obj)
        if witness is None:
            print("k4multi: absent")
            return 0
        print(
            f"k4multi: found on vertices {witness.vertices} "
            f"with matching layers {witness.layers}"
        )
        return 1
    raise AssertionError(pattern)


def _cmd_gen(args) -> int:
    name = args.construction
    params = args.params
    counts = {
        "bn": 1,
        "kn3": 1,
        "cnk": 2,
        "snk": 2,
        "shat": 3,
        "mg-bipartite": 1,
        "mg-turan": 1,
    }
    if len(params) != counts[name]:
        print(
            f"construction {name} takes {counts[name]} parameter(s)",
            file=sys.stderr,
        )
        return 2
    try:
        if name == "bn":
            obj = balanced_bipartite3(params[0])
        elif name == "kn3":
            obj = complete3(params[0])
        elif name == "cnk":
            obj = clique_plus_isolated(params[0], params[1])
        elif name == "snk":
            # k counts the independent part of the complement-of-clique graph
            obj = complete_minus_clique(params[0], params[1])
        elif name == "shat":
            obj = complete_split_plus_isolated(params[0], params[1], params[2])
        elif name == "mg-bipartite":
            obj = bipartite_construction_5(params[0])
        else:
            obj = turan_layers_5(params[0])
    except ValueError as exc:
        print(f"invalid parameters: {exc}", file=sys.stderr)
        return 2
    if isinstance(obj, Uniform3Graph):
        text = write_3graph(obj)
        stats = (
            f"edges={obj.edge_count} min_degree={min(obj.degrees(), default=0)} "
            f"norm_2={obj.lp_norm(2)}"
        )
        if name == "bn":
            stats += f" closed_norm_2={bn_l2_closed(obj.n)}"
    elif isinstance(obj, SimpleGraph):
        text = write_graph(obj)
        stats = f"edges={obj.edge_count} min_degree={min(obj.degrees(), default=0)}"
    else:
        text = write_mgraph(obj)
        stats = f"size={obj.size} min_degree={obj.min_degree()}"
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        print(f"wrote {args.out}: {stats}")
    else:
        sys.stdout.write(text)
        print(stats, file=sys.stderr)
    return 0


def _cmd_bounds(args) -> int:
    step = args.grid
    if step <= 0:
        print("grid step must be positive", file=sys.stderr)
        return 2
    rows = []
    if args.table == "ak":
        header = "x,value,active_branch"
        names = ("star", "clique")
        x = 0.0
        while x <= 0.5 + 1e-12:
            pt = ak_s2_bound(min(x, 0.5))
            rows.append(
                f"{min(x, 0.5):.10g},{pt.value:.12g},{names[pt.active_branch]}"
            )
            x += step
    elif args.table == "prop23":
        header = "x,alpha,value,active_branch"
        names = ("split", "star")
        x = 0.0
        while x <= 0.5 + 1e-12:
            alpha = 0.0
            while alpha <= 0.5 + 1e-12:
                pt = prop23_bound(min(x, 0.5), min(alpha, 0.5))
                rows.append(
                    f"{min(x, 0.5):.10g},{min(alpha, 0.5):.10g},"
                    f"{pt.value:.12g},{names[pt.active_branch]}"
                )
                alpha += step
            x += step
    else:
        header = "x,value,active_branch"
        y = 0.0
        while y <= 0.5 + 1e-12:
            val = f_of(min(y, 0.5))
            clipped = min(y, 0.5)
            star = (1 - 2 * clipped) ** 1.5 + 6 * clipped - 1
            branch = "star" if abs(val - star) <= 1e-12 else "clique"
            rows.append(f"{clipped:.10g},{val:.12g},{branch}")
            y += step
    text = header + "\n" + "\n".join(rows) + "\n"
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        print(f"wrote {args.out}: {len(rows)} rows")
    else:
        sys.stdout.write(text)
    return 0


def _cmd_search(args) -> int:
    from . import search

    objective = args.objective
    if objective == "k4multi":
        if args.n is None or args.m is None:
            print("k4multi needs --n and --m", file=sys.stderr)
            return 2
        report = search.max_k4free_multigraph(
            args.n, args.m, engine=args.engine, budget=args.budget, workers=args.workers
        )
    elif objective == "ak-s2":
        if args.n is None or args.m is None:
            print("ak-s2 needs --n and --m", file=sys.stderr)
            return 2
        report = search.max_s2_graph(args.n, args.m)
    elif objective == "aes":
        if args.n is None:
            print("aes needs --n", file=sys.stderr)
            return 2
        scan = search.aes_scan(args.n)
        report = search.SearchReport(
            objective="aes",
            n=scan.n,
            m=None,
            optimum=scan.violations,
            witness="",
            witness_kind="none",
            nodes=scan.states,
            elapsed=scan.elapsed,
            complete=True,
            engine="exhaustive",
            params={
                "triangle_free": scan.triangle_free,
                "above_threshold": scan.above_threshold,
                "boundary_nonbipartite": scan.boundary_nonbipartite,
            },
        )
    elif objective == "fano-l2":
        if args.n is None:
            print("fano-l2 needs --n", file=sys.stderr)
            return 2
        report = search.max_l2_fano_free(args.n, budget=args.budget)
    else:  # bipartite-l2
        if args.n is None:
            print("bipartite-l2 needs --n", file=sys.stderr)
            return 2
        scan = search.bipartite_l2_scan(args.n)
        report = search.SearchReport(
            objective="bipartite-l2",
            n=scan.n,
            m=None,
            optimum=scan.max_norm,
            witness=scan.witness,
            witness_kind="3graph",
            nodes=scan.states,
            elapsed=scan.elapsed,
            complete=True,
            engine="exhaustive",
            params={
                "closed_value": scan.closed_value,
                "maximizer_count": scan.maximizer_count,
                "unique_up_to_iso": scan.unique_up_to_iso,
            },
        )
    payload = dataclasses.asdict(report)
    payload["params"]["seed"] = args.seed
    payload["params"]["workers"] = args.workers
    text = json.dumps(payload, indent=2, sort_keys=True)
    if args.out:
        Path(args.out).write_text(text + "\n", encoding="utf-8")
    print(
        f"{objective}: optimum={report.optimum} nodes={report.nodes} "
        f"complete={report.complete} elapsed={report.elapsed:.1f}s"
    )
    if not args.out:
        print(text)
    return 0


def _cmd_verify(args) -> int:
    report = run_suite(
        args.suite, budget=args.budget, workers=args.workers, seed=args.seed
    )
    for check in report.checks:
        line = f"{check.status.upper():7s} {check.check_id}"
        if check.status == "fail":
            line += f" measured={check.measured!r} expected={check.expected!r}"
        if check.note:
            line += f" ({check.note})"
        print(line)
    print(
        f"suite {report.suite}: {report.passed} passed, {report.failed} failed, "
        f"{report.skipped} skipped in {report.elapsed:.1f}s -> {report.overall}"
    )
    if args.out:
        Path(args.out).write_text(report_to_json(report) + "\n", encoding="utf-8")
    return 0 if report.overall == "pass" else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fano-l2",
        description="Exact calculus, detectors, bounds, and brute-force "
        "oracles for the squared-norm extremal theory of 3-graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_norm = sub.add_parser("norm", help="p-norm of a stored 3graph or graph")
    p_norm.add_argument("file")
    p_norm.add_argument("--p", type=int, default=2)
    p_norm.set_defaults(fn=_cmd_norm)

    p_check = sub.add_parser("check", help="run a pattern detector on a file")
    p_check.add_argument("file")
    p_check.add_argument(
        "--pattern", required=True, choices=("fano", "k53", "k4multi", "bipartite3")
    )
    p_check.set_defaults(fn=_cmd_check)

    p_gen = sub.add_parser("gen", help="write a named construction to a file")
    p_gen.add_argument(
        "--construction",
        required=True,
        choices=("bn", "kn3", "cnk", "snk", "shat", "mg-bipartite", "mg-turan"),
    )
    p_gen.add_argument("--params", type=int, nargs="+", required=True)
    p_gen.add_argument("--out")
    p_gen.set_defaults(fn=_cmd_gen)

    p_bounds = sub.add_parser("bounds", help="emit a CSV table of a bound")
    p_bounds.add_argument("--table", required=True, choices=("ak", "prop23", "f"))
    p_bounds.add_argument("--grid", type=float, default=0.01)
    p_bounds.add_argument("--out")
    p_bounds.set_defaults(fn=_cmd_bounds)

    p_search = sub.add_parser("search", help="run a brute-force oracle")
    p_search.add_argument(
        "--objective",
        required=True,
        choices=("k4multi", "ak-s2", "aes", "fano-l2", "bipartite-l2"),
    )
    p_search.add_argument("--n", type=int)
    p_search.add_argument("--m", type=int)
    p_search.add_argument("--engine", choices=("exhaustive", "bnb"), default="exhaustive")
    p_search.add_argument("--budget", type=float)
    p_search.add_argument("--workers", type=int, default=1)
    p_search.add_argument("--seed", type=int, default=0)
    p_search.add_argument("--out")
    p_search.set_defaults(fn=_cmd_search)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument(
        "--suite",
        required=True,
        choices=("identities", "lemma51", "roots", "constructions", "oracles", "all"),
    )
    p_verify.add_argument("--budget", type=float)
    p_verify.add_argument("--workers", type=int, default=1)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--out")
    p_verify.set_defaults(fn=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

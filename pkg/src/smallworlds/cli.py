"""Command-line surface: analyze, compare, family, lorenz, verify, catalog.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
JSON is the primary machine output; curves and growth tables also emit CSV.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import catalog, verify
from .arrays import (
    alpha_array,
    density,
    gamma_array,
    neighboring_index,
)
from .families import FAMILY_KINDS, FamilySpec, make_family
from .graph import (
    DisconnectedGraphError,
    EdgeListParseError,
    Graph,
    degree_array,
    distance_stats,
    is_connected,
    is_tree,
    parse_edge_list,
    to_edge_list,
)
from .lorenz import (
    gini_generalized,
    gini_standard,
    lorenz_curve,
    majorize_compare,
    power_measure,
    theil,
)
from .smallworld import (
    DEFAULT_TARGET_SIZES,
    classify_degree_smallworld,
    classify_distance_smallworld,
    growth_report,
    params_for_targets,
    smaller_world_compare,
)

EXIT_OK, EXIT_VERIFY_FAIL, EXIT_USAGE = 0, 1, 2


class CliError(Exception):
    pass


def _num(x):
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else float(x)
    return x


def _resolve_input(token: str) -> Graph:
    """A token is an edge-list path or a catalog id."""
    if token in catalog.catalog_ids():
        return catalog.catalog_figure(token).graph
    path = Path(token)
    if path.exists():
        try:
            return parse_edge_list(path.read_text())
        except EdgeListParseError as exc:
            raise CliError(f"{token}: {exc}") from exc
    raise CliError(f"{token!r} is neither a readable file nor a catalog id")


def _graph_from_args(args) -> Graph:
    sources = [s for s in (args.input, args.catalog, args.family) if s]
    if len(sources) != 1:
        raise CliError("exactly one of --input, --catalog, --family is required")
    if args.input:
        return _resolve_input(args.input)
    if args.catalog:
        try:
            return catalog.catalog_figure(args.catalog).graph
        except KeyError as exc:
            raise CliError(str(exc)) from exc
    spec = _family_spec(args)
    size = args.m if args.family in ("spider", "kite", "s1", "s2") else args.n
    if size is None:
        raise CliError("--family needs --n (or --m for spider/kite/s1/s2)")
    return make_family(spec, size)


def _family_spec(args) -> FamilySpec:
    if args.family not in FAMILY_KINDS:
        raise CliError(f"unknown family {args.family!r}; choose from {FAMILY_KINDS}")
    if args.family in ("s1", "s2"):
        return FamilySpec(args.family, a=args.a, b=args.b)
    if args.a is not None or args.b is not None:
        raise CliError(f"family {args.family!r} takes no --a/--b")
    return FamilySpec(args.family)


def analysis_report(g: Graph) -> dict:
    delta = degree_array(g)
    connected = is_connected(g)
    report = {
        "nodes": g.n,
        "edges": g.edge_count,
        "connected": connected,
        "is_tree": is_tree(g),
        "delta": list(delta),
        "gamma": list(gamma_array(g)),
        "nu": neighboring_index(g),
        "density": _num(density(g)) if g.n >= 2 else None,
        "measures": {
            "gini_generalized": _num(gini_generalized(delta)),
            "theil": theil(delta),
            "power_p2": power_measure(delta, 2),
            "gini_standard": _num(gini_standard(delta)),
        },
    }
    if connected and g.n >= 2:
        ds = distance_stats(g)
        report["alpha"] = list(alpha_array(g))
        report["distance"] = {
            "diameter": ds.diameter,
            "mean": _num(ds.mean_distance),
            "median": _num(ds.median_distance),
        }
    return report


def cmd_analyze(args) -> int:
    print(json.dumps(analysis_report(_graph_from_args(args)), indent=2))
    return EXIT_OK


def cmd_compare(args) -> int:
    g, h = _resolve_input(args.a), _resolve_input(args.b)
    if g.n != h.n:
        print(json.dumps({"error": "node counts differ", "a": g.n, "b": h.n}))
        return EXIT_USAGE
    dg, dh = degree_array(g), degree_array(h)
    delta_verdict = majorize_compare(dg, dh)
    gamma_verdict = majorize_compare(gamma_array(g), gamma_array(h))
    sw = smaller_world_compare(g, h, args.a, args.b)
    record = {
        "a": {"name": args.a, "delta": list(dg), "gamma": list(gamma_array(g))},
        "b": {"name": args.b, "delta": list(dh), "gamma": list(gamma_array(h))},
        "delta_verdict": delta_verdict.relation.value,
        "delta_strict": delta_verdict.strict,
        "gamma_verdict": gamma_verdict.relation.value,
        "gamma_strict": gamma_verdict.strict,
        "smaller_world": sw.statement,
        "measures": {
            name: {
                "gini_generalized": _num(gini_generalized(d)),
                "theil": theil(d),
                "power_p2": power_measure(d, 2),
            }
            for name, d in ((args.a, dg), (args.b, dh))
        },
    }
    print(json.dumps(record, indent=2))
    return EXIT_OK


def _parse_grid(text: str) -> tuple[int, ...]:
    """Either a comma list "10,20,50" or a doubling range "32..1024"."""
    if ".." in text:
        lo, hi = (int(t) for t in text.split("..", 1))
        grid = []
        n = lo
        while n <= hi:
            grid.append(n)
            n *= 2
        return tuple(grid)
    return tuple(int(t) for t in text.split(","))


def cmd_family(args) -> int:
    spec = _family_spec(args)
    if args.m_grid:
        params = _parse_grid(args.m_grid)
    elif args.n_grid:
        params = params_for_targets(spec, _parse_grid(args.n_grid))
    else:
        params = params_for_targets(spec, DEFAULT_TARGET_SIZES)
    report = growth_report(spec, params)
    rows = [
        {
            "param": r.param, "n": r.n,
            "max_degree": r.max_degree,
            "mean_degree": _num(r.mean_degree),
            "median_degree": _num(r.median_degree),
            "diameter": r.diameter,
            "mean_distance": _num(r.mean_distance),
            "median_distance": _num(r.median_distance),
            "ratios": r.ratios(),
        }
        for r in report.rows
    ]
    if args.format == "csv":
        cols = ["param", "n", "max_degree", "mean_degree", "median_degree",
                "diameter", "mean_distance", "median_distance"]
        print(",".join(cols))
        for row in rows:
            print(",".join(str(row[c]) for c in cols))
        return EXIT_OK
    closed = classify_degree_smallworld(report, closed_form=True)
    try:
        empirical = classify_distance_smallworld(report, closed_form=False).flags()
    except ValueError:
        # Grid too short/narrow for the trend heuristic; closed form still applies.
        empirical = None
    print(json.dumps({
        "family": spec.kind,
        "rows": rows,
        "classification": {
            "closed-form": closed.flags(),
            "empirical-trend": empirical,
        },
    }, indent=2))
    return EXIT_OK


def cmd_lorenz(args) -> int:
    g = _resolve_input(args.input_token)
    values = degree_array(g) if args.array == "delta" else gamma_array(g)
    print("j,cumulative")
    for j, s in lorenz_curve(values):
        print(f"{j},{_num(Fraction(s))}")
    return EXIT_OK


def cmd_verify(args) -> int:
    results = verify.run_fixtures(only=args.only, theorem6_max_n=args.n)
    width = max(len(r.name) for r in results)
    for r in results:
        line = f"{r.name:<{width}}  {r.status.upper():7}"
        if r.status != verify.PASS:
            line += f"  expected={r.expected} computed={r.computed}"
        print(line)
    fails = sum(r.status == verify.FAIL for r in results)
    flagged = sum(r.status == verify.FLAGGED for r in results)
    passes = sum(r.status == verify.PASS for r in results)
    print(f"\n{passes} passed, {fails} failed, {flagged} flagged")
    return EXIT_VERIFY_FAIL if fails else EXIT_OK


def cmd_catalog(args) -> int:
    if args.action == "list":
        for fid in catalog.catalog_ids():
            entry = catalog.catalog_figure(fid)
            expected = {k: v for k, v in entry.expected.items()}
            print(f"{fid}: n={entry.graph.n} edges={entry.graph.edge_count} "
                  f"expected={expected}")
        return EXIT_OK
    try:
        entry = catalog.catalog_figure(args.id)
    except KeyError as exc:
        raise CliError(str(exc)) from None
    sys.stdout.write(to_edge_list(entry.graph))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="smallworlds")
    sub = p.add_subparsers(dest="command", required=True)

    def add_graph_source(sp):
        sp.add_argument("--input", help="edge-list file path")
        sp.add_argument("--catalog", help="catalog figure id")
        sp.add_argument("--family", help="family name")
        sp.add_argument("--n", type=int, help="node count for N-parameterized families")
        sp.add_argument("--m", type=int, help="parameter M for spider/kite/s1/s2")
        sp.add_argument("--a", type=int, help="parameter a for s1/s2")
        sp.add_argument("--b", type=int, help="parameter b for s1/s2")

    sp = sub.add_parser("analyze", help="full invariant report of one graph")
    add_graph_source(sp)
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("compare", help="majorization comparison of two graphs")
    sp.add_argument("a", help="edge-list path or catalog id")
    sp.add_argument("b", help="edge-list path or catalog id")
    sp.set_defaults(func=cmd_compare)

    sp = sub.add_parser("family", help="growth report and small-world classification")
    sp.add_argument("--family", required=True)
    sp.add_argument("--a", type=int)
    sp.add_argument("--b", type=int)
    sp.add_argument("--n-grid", help='target node counts: "32..1024" or "10,100,1000"')
    sp.add_argument("--m-grid", help='explicit parameter grid: "10,20,50"')
    sp.add_argument("--format", choices=("json", "csv"), default="json")
    sp.set_defaults(func=cmd_family)

    sp = sub.add_parser("lorenz", help="non-normalized Lorenz curve as CSV")
    sp.add_argument("input_token", metavar="input", help="edge-list path or catalog id")
    sp.add_argument("--array", choices=("delta", "gamma"), default="delta")
    sp.set_defaults(func=cmd_lorenz)

    sp = sub.add_parser("verify", help="run the worked-example fixture suite")
    sp.add_argument("--only", help="restrict to one fixture group")
    sp.add_argument("--n", type=int, default=8,
                    help="largest tree size for the theorem6 group")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("catalog", help="list catalog entries or emit one as an edge list")
    sp.add_argument("action", choices=("list", "emit"))
    sp.add_argument("id", nargs="?")
    sp.set_defaults(func=cmd_catalog)

    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CliError, EdgeListParseError, DisconnectedGraphError,
            ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

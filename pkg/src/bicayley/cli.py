"""``bicayley`` command line: build, analyze, verify and export graphs.

Exit codes: 0 success, 1 a verification claim failed, 2 bad usage or input.
"""
from __future__ import annotations

import argparse
import json
import sys

from bicayley import __version__
from bicayley.errors import BiCayleyError
from bicayley.graph import BiCayleySpec, LabeledGraph, bicayley_graph
from bicayley.graphio import export_dot, export_edgelist, export_json, read_graph, write_text
from bicayley.groups import (ConnectionSet, elements_of_order, involutions, make_cyclic, parse_elements,
                             parse_group, preset_connection_sets)
from bicayley.invariants import (Budget, chromatic_number_exact, clique_number_exact, component_diameters,
                                 connected_components, degree_profile, diameter, girth,
                                 independence_number_exact, is_eulerian)
from bicayley import verifier

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

EXPORTERS = {"json": export_json, "dot": export_dot, "edgelist": export_edgelist}


class UsageError(Exception):
    pass


def _budget(args) -> Budget:
    base = Budget.default()
    return Budget(nodes=args.budget_nodes or base.nodes, seconds=args.budget_seconds or base.seconds)


def resolve_set(source: str, g, role: str) -> ConnectionSet:
    """Connection set from ``orders:<list>``, ``explicit:<file>``, ``involutions``
    or a bare comma-separated element list."""
    source = source.strip()
    if source == "involutions":
        elems = involutions(g)
    elif source.startswith("orders:"):
        try:
            orders = {int(t) for t in source[7:].split(",") if t.strip()}
        except ValueError:
            raise UsageError(f"bad order list in {source!r}") from None
        elems = elements_of_order(g, orders)
    elif source.startswith("explicit:"):
        path = source[9:]
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc.strerror}") from None
        elems = parse_elements(text.replace("\n", ",").strip(","), g)
    else:
        elems = parse_elements(source, g)
    cs = ConnectionSet(elems, role)
    cs.validate(g)
    return cs


def _build_graph(args) -> LabeledGraph:
    if args.group is None:
        if args.p is None or args.q is None:
            raise UsageError("give --p and --q, or --group with --s1/--s2/--s3")
        if args.preset not in (None, "p2q2"):
            raise UsageError(f"unknown preset {args.preset!r}")
        s1, s2, s3 = preset_connection_sets(args.p, args.q)
        g = make_cyclic(args.p ** 2 * args.q ** 2)
        return bicayley_graph(BiCayleySpec(g, s1, s2, s3))
    g = parse_group(args.group)
    if args.s1 is None or args.s2 is None:
        raise UsageError("--group needs --s1 and --s2")
    s1 = resolve_set(args.s1, g, "S1")
    s2 = resolve_set(args.s2, g, "S2")
    s3 = resolve_set(args.s3 or str(g.identity), g, "S3")
    return bicayley_graph(BiCayleySpec(g, s1, s2, s3))


def cmd_build(args) -> int:
    graph = _build_graph(args)
    out = args.output or "graph.graph.json"
    write_text(out, export_json(graph))
    if args.dot:
        write_text(args.dot, export_dot(graph))
    print(f"vertices {graph.n} edges {graph.edge_count}")
    print(f"wrote {out}")
    return EXIT_OK


def _num(x):
    return "inf" if x == float("inf") else x


def analyze_graph(graph: LabeledGraph, budget: Budget) -> dict:
    comps = connected_components(graph)
    eul = is_eulerian(graph)
    prof = degree_profile(graph)
    return {
        "vertices": graph.n,
        "edges": graph.edge_count,
        "components": len(comps),
        "componentDiameters": component_diameters(graph),
        "diameter": _num(diameter(graph)),
        "girth": _num(girth(graph)),
        "degreeProfile": str(prof),
        "eulerian": eul.value,
        "eulerianReason": eul.reason,
        "omega": clique_number_exact(graph, budget).to_json(),
        "alpha": independence_number_exact(graph, budget).to_json(),
        "chi": chromatic_number_exact(graph, budget).to_json(),
    }


def cmd_analyze(args) -> int:
    graph = read_graph(args.graph)
    report = analyze_graph(graph, _budget(args))
    text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    if args.output:
        write_text(args.output, text)
    for key in ("vertices", "edges", "components", "diameter", "girth", "degreeProfile", "eulerian"):
        print(f"{key}: {report[key]}")
    for key in ("omega", "alpha", "chi"):
        r = report[key]
        tag = "exact" if r["exhaustive"] else f"inconclusive, bounds [{r.get('lower')}, {r.get('upper')}]"
        print(f"{key}: {r['value']} ({tag})")
    return EXIT_OK


def _emit(report: verifier.VerificationReport, args) -> int:
    data = report.to_json(stable=args.stable)
    if args.output:
        write_text(args.output, json.dumps(data, indent=2) + "\n")
    for c in report.claims:
        if c.status != verifier.PASS or args.verbose:
            print(f"{c.status:<12} {c.claim_id}: expected {c.expected}, computed {c.computed}"
                  + (f" ({c.notes})" if c.notes else ""))
    s = report.summary
    print(f"{s['total']} claims: {s['pass']} pass, {s['fail']} fail, "
          f"{s['inconclusive']} inconclusive, {s['diagnostic']} diagnostic")
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_verify(args) -> int:
    if args.p is None or args.q is None:
        raise UsageError("verify needs --p and --q")
    report = verifier.verify_p2q2(args.p, args.q, _budget(args))
    if args.distances:
        report.extend(verifier.distance_diagnostics(args.p, args.q))
    return _emit(report, args)


def cmd_verify_general(args) -> int:
    g = parse_group(args.group)
    if args.s1 is not None or args.s2 is not None:
        if args.s1 is None or args.s2 is None:
            raise UsageError("give both --s1 and --s2, or neither for random trials")
        report = verifier.verify_general(g, resolve_set(args.s1, g, "S1"), resolve_set(args.s2, g, "S2"),
                                         _budget(args))
    else:
        report = verifier.verify_general_trials(g, args.trials, args.seed, _budget(args))
    return _emit(report, args)


def cmd_verify_involution(args) -> int:
    g = parse_group(args.group)
    if args.s1 is not None or args.s2 is not None:
        if args.s1 is None or args.s2 is None:
            raise UsageError("give both --s1 and --s2, or neither for random trials")
        report = verifier.verify_involution(g, resolve_set(args.s1, g, "S1"),
                                            resolve_set(args.s2, g, "S2"), _budget(args))
    else:
        report = verifier.verify_involution_trials(g, args.trials, args.seed, _budget(args))
    return _emit(report, args)


def cmd_export(args) -> int:
    graph = read_graph(args.graph)
    fmt = args.format
    if fmt is None and args.output:
        fmt = "dot" if args.output.endswith(".dot") else "edgelist" if args.output.endswith(".edges") else None
    if fmt not in EXPORTERS:
        raise UsageError(f"unknown export format {fmt!r}; choose from {sorted(EXPORTERS)}")
    text = EXPORTERS[fmt](graph)
    if args.output:
        write_text(args.output, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _budget_flags(p):
    p.add_argument("--budget-nodes", type=int, help="search-node limit per solver call")
    p.add_argument("--budget-seconds", type=float,
                   help="time limit per solver call (default 60, or BICAY_BUDGET_SECONDS)")


def _set_flags(p, group_required=False):
    p.add_argument("--group", required=group_required,
                   help="cyclic:<n>, sym:<k>, dihedral:<n> or product:<a>x<b>")
    p.add_argument("--s1", help="elements, orders:<list>, explicit:<file> or involutions")
    p.add_argument("--s2")


def _report_flags(p):
    p.add_argument("-o", "--output", help="write the report JSON here (.report.json)")
    p.add_argument("--stable", action="store_true", help="omit timestamp and timings from the report")
    p.add_argument("-v", "--verbose", action="store_true", help="print passing claims too")
    _budget_flags(p)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="bicayley", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build a Bi-Cayley graph and write .graph.json")
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--preset", help="p2q2 (default when --p/--q are given)")
    _set_flags(p)
    p.add_argument("--s3")
    p.add_argument("-o", "--output")
    p.add_argument("--dot", help="also write a DOT file")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("analyze", help="compute invariants of a graph file")
    p.add_argument("graph")
    p.add_argument("-o", "--output")
    _budget_flags(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="check every claim for Z_{p^2 q^2}")
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--distances", action="store_true", help="append the distance tables")
    _report_flags(p)
    p.set_defaults(func=cmd_verify)

    for name, func in (("verify-general", cmd_verify_general), ("verify-involution", cmd_verify_involution)):
        p = sub.add_parser(name)
        _set_flags(p, group_required=True)
        p.add_argument("--trials", type=int, default=50)
        p.add_argument("--seed", type=int, default=0)
        _report_flags(p)
        p.set_defaults(func=func)

    p = sub.add_parser("export", help="write a graph file as DOT, edge list or JSON")
    p.add_argument("graph")
    p.add_argument("--format", help="dot, edgelist or json (else from the -o suffix)")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_export)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, BiCayleyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

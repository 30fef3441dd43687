"""Command-line interface.

Subcommands construct ideals, compute reduced bases and Betti diagrams,
classify purity, intersect ideals, and run the verification suites.  Results
go to stdout, progress to stderr.  Exit codes: 0 success, 1 verification
failure, 2 usage error, 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .algebra import DEFAULT_PRIME, DEGREVLEX, poly_to_str
from .betti import koszul_betti
from .errors import DEFAULT_MAX_COLUMNS, ResourceCapExceeded, check_variable_cap
from .graphs import automorphisms, classify_pure, parse_graph
from .groebner import basis_to_text, ideal_intersection, min_generator_degrees
from .ideals import binomial_edge_ideal, parity_ideal
from .verify import sweep, verify_case_graphs, verify_exact_sequences, verify_lemmas

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_RESOURCE_CAP = 3


def _default_prime() -> int:
    env = os.environ.get("PBEI_PRIME")
    return int(env) if env else DEFAULT_PRIME


def _graph_arg(spec: str):
    text = spec.strip()
    if text.startswith("{"):
        return parse_graph(json.loads(text))
    return parse_graph(text)


def _ideal_for(graph, kind: str, prime: int):
    check_variable_cap(2 * graph.n)
    if kind == "bei":
        return binomial_edge_ideal(graph, prime)
    return parity_ideal(graph, prime)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pbei",
        description="Parity binomial edge ideal workbench: ideals, Groebner "
        "bases, Betti diagrams, purity classification, verification sweeps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, prime=True, fmt=True):
        if prime:
            p.add_argument(
                "--prime", type=int, default=_default_prime(),
                help="coefficient field modulus (default: $PBEI_PRIME or 32003)",
            )
        if fmt:
            p.add_argument(
                "--format", choices=("text", "json"), default="text", dest="fmt"
            )

    p = sub.add_parser("ideal", help="print the generators of an edge ideal")
    p.add_argument("graph", help="graph descriptor, e.g. cycle:3 or edges:1-2,2-3")
    p.add_argument("--kind", choices=("parity", "bei"), default="parity")
    add_common(p)

    p = sub.add_parser("gb", help="print the reduced Groebner basis")
    p.add_argument("graph")
    p.add_argument("--kind", choices=("parity", "bei"), default="parity")
    add_common(p)

    p = sub.add_parser("betti", help="compute the Betti diagram of R/J_G")
    p.add_argument("graph")
    p.add_argument("--imax", type=int, required=True)
    p.add_argument("--jmax", type=int, required=True)
    p.add_argument("--kind", choices=("parity", "bei"), default="parity")
    p.add_argument("--max-columns", type=int, default=DEFAULT_MAX_COLUMNS)
    add_common(p)

    p = sub.add_parser("classify", help="purity verdict from graph structure")
    p.add_argument("graph")
    add_common(p, prime=False)

    p = sub.add_parser("intersect", help="intersect the parity ideals of two graphs")
    p.add_argument("graph_a")
    p.add_argument("graph_b")
    add_common(p)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--lemmas", action="store_true")
    p.add_argument("--sequences", action="store_true")
    p.add_argument("--cases", action="store_true")
    p.add_argument("--sweep", type=int, metavar="N", default=None)
    p.add_argument("--imax", type=int, default=8)
    p.add_argument("--jmax", type=int, default=12)
    p.add_argument("--jobs", type=int, default=None,
                   help="parallel workers for the sweep (default: cpu count; 1 = serial)")
    add_common(p)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def _cmd_ideal(args) -> int:
    g = _graph_arg(args.graph)
    ideal = _ideal_for(g, args.kind, args.prime)
    gens = [poly_to_str(f) for f in ideal.gens]
    if args.fmt == "json":
        print(json.dumps({"n": g.n, "prime": args.prime, "kind": args.kind,
                          "generators": gens}))
    else:
        if not gens:
            print("0")
        for s in gens:
            print(s)
    return EXIT_OK


def _cmd_gb(args) -> int:
    g = _graph_arg(args.graph)
    ideal = _ideal_for(g, args.kind, args.prime)
    basis = ideal.groebner_basis(DEGREVLEX)
    if args.fmt == "json":
        print(json.dumps({
            "order": "degrevlex", "p": args.prime, "n": g.n,
            "basis": [poly_to_str(f) for f in basis],
        }))
    else:
        sys.stdout.write(basis_to_text(ideal))
    return EXIT_OK


def _cmd_betti(args) -> int:
    g = _graph_arg(args.graph)
    ideal = _ideal_for(g, args.kind, args.prime)
    table = koszul_betti(
        ideal, args.imax, args.jmax,
        max_columns=args.max_columns,
        vertex_symmetries=automorphisms(g),
    )
    verdict = table.purity()
    if args.fmt == "json":
        payload = table.to_json()
        payload["pure"] = verdict.pure
        payload["degree_sequence"] = list(verdict.degree_sequence)
        payload["witnesses"] = [list(w) for w in verdict.witnesses]
        print(json.dumps(payload))
    else:
        print(table.render())
        print(verdict.describe())
    return EXIT_OK


def _cmd_classify(args) -> int:
    g = _graph_arg(args.graph)
    verdict = classify_pure(g)
    if args.fmt == "json":
        print(json.dumps({
            "pure": verdict.pure,
            "reason": verdict.reason,
            "stripped_isolated": list(verdict.stripped_isolated),
        }))
    else:
        print(("pure" if verdict.pure else "impure") + f": {verdict.reason}")
        if verdict.stripped_isolated:
            print(f"note: stripped isolated vertices {list(verdict.stripped_isolated)}")
    return EXIT_OK


def _cmd_intersect(args) -> int:
    ga = _graph_arg(args.graph_a)
    gb = _graph_arg(args.graph_b)
    n = max(ga.n, gb.n)
    from .graphs import from_edge_list

    ga = from_edge_list(sorted(ga.edges), n=n) if ga.n < n else ga
    gb = from_edge_list(sorted(gb.edges), n=n) if gb.n < n else gb
    check_variable_cap(2 * n + 1)
    inter = ideal_intersection(parity_ideal(ga, args.prime), parity_ideal(gb, args.prime))
    degs = min_generator_degrees(inter)
    gens = [poly_to_str(f) for f in inter.gens]
    if args.fmt == "json":
        print(json.dumps({"n": n, "prime": args.prime, "generators": gens,
                          "min_generator_degrees": degs}))
    else:
        if not gens:
            print("0")
        for s in gens:
            print(s)
        print(f"min generator degrees: {degs}")
    return EXIT_OK


def _cmd_verify(args) -> int:
    run_all = not (args.lemmas or args.sequences or args.cases or args.sweep is not None)
    reports = []
    if args.lemmas or run_all:
        print("running lemma checks ...", file=sys.stderr)
        reports.append(verify_lemmas(args.prime))
    if args.sequences or run_all:
        print("running exact-sequence checks ...", file=sys.stderr)
        reports.append(verify_exact_sequences(args.prime))
    if args.cases or run_all:
        print("running case-graph checks ...", file=sys.stderr)
        reports.append(verify_case_graphs(args.prime))
    sweep_report = None
    if args.sweep is not None:
        print(f"running sweep up to n = {args.sweep} ...", file=sys.stderr)
        sweep_report = sweep(
            args.sweep, window=(args.imax, args.jmax), p=args.prime,
            jobs=args.jobs if args.jobs is not None else (os.cpu_count() or 1),
        )
    ok = all(r.ok for r in reports) and (sweep_report is None or sweep_report.ok)
    if args.fmt == "json":
        payload = {"ok": ok, "reports": [r.to_json() for r in reports]}
        if sweep_report is not None:
            payload["sweep"] = sweep_report.to_json()
        print(json.dumps(payload))
    else:
        for r in reports:
            print(r.render())
        if sweep_report is not None:
            print(sweep_report.render())
        print("VERIFY OK" if ok else "VERIFY FAILED")
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def _cmd_serve(args) -> int:
    import uvicorn

    from .service.app import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port)
    return EXIT_OK


_COMMANDS = {
    "ideal": _cmd_ideal,
    "gb": _cmd_gb,
    "betti": _cmd_betti,
    "classify": _cmd_classify,
    "intersect": _cmd_intersect,
    "verify": _cmd_verify,
    "serve": _cmd_serve,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except ResourceCapExceeded as exc:
        print(f"resource cap exceeded: {exc}", file=sys.stderr)
        return EXIT_RESOURCE_CAP
    except (ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

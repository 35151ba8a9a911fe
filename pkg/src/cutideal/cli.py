"""Command-line front end: ``cutideal {show,decompose,betti,verify}``.

Exit codes: 0 success, 1 verification failure, 2 input error,
3 guard exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from .cut_monomials import VarContext, cut_ideal, render, s_degree, support, t_degree
from .errors import CutIdealError, GuardExceeded
from .graph_core import Graph, parse_graph
from .homology import (
    MAX_BETTI_VARS,
    graded_betti,
    has_linear_first_syzygies,
    has_linear_resolution,
    has_only_linear_first_syzygies,
    invariants_from_betti,
    is_prime,
    is_pure,
)
from .monomial_ideal import minimal_primes
from .structure import Decomposition, general_decomposition
from .verify import DEFAULT_BETTI_EDGES, MAX_BETTI_EDGES, run_verification

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_GUARD = 0, 1, 2, 3


def load_graph(source: str) -> Graph:
    path = Path(source)
    if path.is_file():
        return parse_graph(path.read_text())
    return parse_graph(source)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)


def _csv(rows: list[list]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue().rstrip("\n")


def cmd_show(args) -> tuple[str, int]:
    g = load_graph(args.graph)
    ideal = cut_ideal(g)
    ctx = ideal.context
    rows = [(render(u, ctx), s_degree(u, ctx), t_degree(u, ctx)) for u in ideal.gens]
    if args.format == "json":
        return _dump({
            "graph": g.to_text(),
            "vertices": g.n,
            "edges": g.m,
            "ideal": ideal.to_json(),
            "generators": [{"monomial": r, "s_degree": s, "t_degree": t} for r, s, t in rows],
        }), EXIT_OK
    if args.format == "csv":
        return _csv([["monomial", "s_degree", "t_degree"], *map(list, rows)]), EXIT_OK
    lines = [f"graph: {g.to_text()}",
             f"vertices {g.n}, edges {g.m}, generators {len(ideal)} (2^{g.n - 1} = {2 ** (g.n - 1)})",
             f"I(G) = {ideal}"]
    lines += [f"  {r:<40} s-degree {s}  t-degree {t}" for r, s, t in rows]
    return "\n".join(lines), EXIT_OK


def _oracle_decomposition(g: Graph) -> Decomposition:
    primes = minimal_primes(cut_ideal(g))
    return Decomposition(VarContext.of(g), tuple(primes), ("oracle",) * len(primes))


def _decomposition_text(dec: Decomposition) -> list[str]:
    names = dec.context.names()
    return [f"  h={bin(p).count('1')}  ({', '.join(names[v] for v in support(p))})  {tag}"
            for p, tag in zip(dec.primes, dec.provenance)]


def cmd_decompose(args) -> tuple[str, int]:
    g = load_graph(args.graph)
    parts: dict[str, Decomposition] = {}
    if args.mode in ("structural", "both"):
        parts["structural"] = general_decomposition(g)
    if args.mode in ("oracle", "both"):
        parts["oracle"] = _oracle_decomposition(g)
    verdict = None
    code = EXIT_OK
    if args.mode == "both":
        equal = parts["structural"].prime_set() == parts["oracle"].prime_set()
        verdict = f"EQUAL, {len(parts['structural'])} primes" if equal else (
            f"DIFFERENT, structural {len(parts['structural'])} vs oracle {len(parts['oracle'])} primes")
        code = EXIT_OK if equal else EXIT_FAIL
    if args.format == "json":
        payload: dict = {"graph": g.to_text()}
        payload.update({k: v.to_json() for k, v in parts.items()})
        if verdict:
            payload["verdict"] = verdict
        return _dump(payload), code
    if args.format == "csv":
        rows = [["source", "height", "vars", "provenance"]]
        for key, dec in parts.items():
            for item in dec.to_json():
                rows.append([key, item["height"], " ".join(item["vars"]), item["provenance"]])
        return _csv(rows), code
    lines = [f"graph: {g.to_text()}"]
    for key, dec in parts.items():
        lines.append(f"{key}: {len(dec)} primes")
        lines += _decomposition_text(dec)
    if verdict:
        lines.append(verdict)
    return "\n".join(lines), code


def cmd_betti(args) -> tuple[str, int]:
    g = load_graph(args.graph)
    limit = args.max_edges if args.max_edges is not None else MAX_BETTI_EDGES
    if limit > MAX_BETTI_EDGES:
        raise GuardExceeded(f"--max-edges cannot exceed {MAX_BETTI_EDGES} for Betti tables")
    if g.m > limit:
        raise GuardExceeded(f"graph has {g.m} edges, Betti tables are limited to {limit}")
    ideal = cut_ideal(g)
    table = graded_betti(ideal, args.char)
    inv = invariants_from_betti(table, ideal.nvars)
    flags = {
        "linear_resolution": has_linear_resolution(table, g.m),
        "pure": is_pure(table),
        "linear_first_syzygies": has_linear_first_syzygies(table, g.m),
        "only_linear_first_syzygies": has_only_linear_first_syzygies(table, g.m),
    }
    if args.format == "json":
        payload = table.to_json()
        payload.update(graph=g.to_text(), projdim=inv.projdim, reg=inv.reg, depth=inv.depth,
                       ideal_betti=table.ideal_totals(), **flags)
        return _dump(payload), EXIT_OK
    if args.format == "csv":
        return table.to_csv().rstrip("\n"), EXIT_OK
    lines = [f"graph: {g.to_text()}  (char {args.char}, {ideal.nvars} variables)",
             table.diagram(),
             f"beta_i(I) = {', '.join(map(str, table.ideal_totals()))}",
             f"projdim(S/I)={inv.projdim}  reg(S/I)={inv.reg}  depth(S/I)={inv.depth}",
             "  ".join(f"{k}={'yes' if v else 'no'}" for k, v in flags.items())]
    return "\n".join(lines), EXIT_OK


def cmd_verify(args) -> tuple[str, int]:
    betti_edges = args.max_edges if args.max_edges is not None else DEFAULT_BETTI_EDGES
    results, sizes = run_verification(args.n_max, betti_edges, fault=args.fault_inject)
    ok = all(r.passed for r in results)
    code = EXIT_OK if ok else EXIT_FAIL
    if args.format == "json":
        return _dump({"catalog": {str(n): c for n, c in sorted(sizes.items())},
                      "passed": ok, "checks": [r.to_json() for r in results]}), code
    if args.format == "csv":
        rows = [["check", "passed", "cases", "failures"]]
        rows += [[r.name, r.passed, r.cases, len(r.failures)] for r in results]
        return _csv(rows), code
    lines = [f"catalog: " + ", ".join(f"n={n}: {c} graphs" for n, c in sorted(sizes.items()))]
    lines += [r.line() for r in results]
    lines.append("ALL PASS" if ok else "FAILURES DETECTED")
    return "\n".join(lines), code


def _prime(text: str) -> int:
    p = int(text)
    if not is_prime(p):
        raise argparse.ArgumentTypeError(f"{p} is not prime")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default="text")
    common.add_argument("--max-edges", type=int, default=None,
                        help=f"edge cap for Betti computations (at most {MAX_BETTI_VARS // 2})")

    parser = argparse.ArgumentParser(prog="cutideal", description="Monomial cut ideals of graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    graph_help = "edge list '<n>; a b; ...', a file containing one, or T<r>/C<r>"
    p = sub.add_parser("show", parents=[common], help="list the generators of I(G)")
    p.add_argument("graph", help=graph_help)
    p.set_defaults(func=cmd_show)

    p = sub.add_parser("decompose", parents=[common], help="minimal primes of I(G)")
    p.add_argument("graph", help=graph_help)
    p.add_argument("--mode", choices=("structural", "oracle", "both"), default="structural")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("betti", parents=[common], help="graded Betti table and invariants")
    p.add_argument("graph", help=graph_help)
    p.add_argument("--char", type=_prime, default=2)
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("verify", parents=[common], help="check every statement over a catalog")
    p.add_argument("n_max", type=int, nargs="?", default=4)
    p.add_argument("--fault-inject", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        text, code = args.func(args)
    except GuardExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (CutIdealError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())

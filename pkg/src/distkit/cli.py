"""Command-line front end: reproducible runs emitting JSON reports.

Exit codes distinguish outcomes scripts care about: 0 success,
2 a theorem hypothesis failed (a legitimate mathematical outcome),
3 a search budget was exhausted, 4 bad input.  The DISTKIT_BUDGET
environment variable overrides the default node budget.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import families
from .coloring import chi_D, chromatic_number
from .errors import Budget, BudgetExceeded
from .graphs import Graph, decode_graph6, encode_graph6, from_edge_json, to_edge_json
from .invariants import bigraph_free_by_alpha, independence_number, vertex_connectivity
from .partitioning import certify_distinguishing_bound
from .paths import (
    circulant_disjoint_paths,
    connectivity_lower_bound_via_paths,
    dihedral_disjoint_paths,
    verify_path_system,
)

EXIT_OK = 0
EXIT_HYPOTHESIS_FAILED = 2
EXIT_BUDGET = 3
EXIT_INPUT = 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse default exit code collides with ours
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _add_graph_source(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--graph6", metavar="TEXT", help="graph6 string")
    group.add_argument("--graph6-file", metavar="PATH", help="file with one graph6 line ('-' for stdin)")
    group.add_argument("--json-file", metavar="PATH", help="edge-list JSON file ('-' for stdin)")


def _read_source(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _load_graph(args) -> Graph:
    if args.graph6 is not None:
        return decode_graph6(args.graph6)
    if args.graph6_file is not None:
        return decode_graph6(_read_source(args.graph6_file).strip())
    return from_edge_json(_read_source(args.json_file))


def _emit(payload, args) -> None:
    text = payload if isinstance(payload, str) else json.dumps(payload, indent=2, sort_keys=True)
    if getattr(args, "output", None):
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _parse_exponents(raw: str | None) -> frozenset[int] | None:
    if raw is None:
        return None
    try:
        return frozenset(int(x) for x in raw.split(",") if x.strip() != "")
    except ValueError as exc:
        raise ValueError(f"bad exponent list {raw!r}: {exc}") from exc


# -- subcommands --------------------------------------------------------


def _cmd_generate(args) -> int:
    kind = args.kind
    if kind == "complete":
        G = families.complete(args.n)
    elif kind == "cycle":
        G = families.cycle(args.n)
    elif kind == "cycle-power":
        G = families.cycle_power(args.n, args.k)
    elif kind == "circulant":
        conn = _parse_exponents(args.connection)
        G = families.circulant(families.CirculantSpec(args.n, conn))
    elif kind == "paley":
        G = families.paley(families.PaleySpec(args.q))
    elif kind == "dihedral":
        G = families.dihedral_cayley(
            families.DihedralSpec(args.m, args.k, _parse_exponents(args.F))
        )
    else:
        spec = families.ApplicationSpec(
            tag=args.tag, r=args.r, n=args.n,
            dihedral_k=args.k, dihedral_F=_parse_exponents(args.F),
        )
        G = families.application_graph(spec)
    _emit(encode_graph6(G) if args.format == "graph6" else to_edge_json(G), args)
    return EXIT_OK


def _cmd_invariants(args) -> int:
    G = _load_graph(args)
    if not (args.alpha or args.kappa or args.chi or args.chi_d or args.bigraph_free is not None):
        raise ValueError("select at least one invariant flag")
    out: dict = {"schema": "1", "n": G.n, "edges": G.edge_count()}
    if args.alpha:
        value, witness = independence_number(G)
        out["alpha"] = {"value": value, "witness": witness}
    if args.kappa:
        out["kappa"] = vertex_connectivity(G).to_json()
    if args.chi:
        out["chi"] = chromatic_number(G, Budget(args.budget, what="chromatic number"))
    if args.chi_d:
        value, witness = chi_D(G, Budget(args.budget, what="chi_D"))
        out["chi_d"] = {"value": value, "witness": witness}
    if args.bigraph_free is not None:
        out["bigraph_free"] = bigraph_free_by_alpha(G, args.bigraph_free).to_json()
    _emit(out, args)
    return EXIT_OK


def _make_constructor(args):
    if args.constructor == "circulant":
        if args.n is None or args.t is None:
            raise ValueError("circulant constructor needs --n and --t")
        G = families.cycle_power(args.n, args.t)
        return G, lambda u, v: circulant_disjoint_paths(args.n, args.t, u, v)
    if args.m is None or args.k is None:
        raise ValueError("dihedral constructor needs --m and --k")
    spec = families.DihedralSpec(args.m, args.k, _parse_exponents(args.F))
    G = families.dihedral_cayley(spec)
    return G, lambda u, v: dihedral_disjoint_paths(spec, u, v, G)


def _cmd_certify_connectivity(args) -> int:
    out: dict = {"schema": "1", "constructor": args.constructor}
    if args.constructor == "flow":
        if not (args.graph6 or args.graph6_file or args.json_file):
            raise ValueError("flow constructor needs a graph source")
        G = _load_graph(args)
        out["n"] = G.n
        out["flow"] = vertex_connectivity(G).to_json()
    else:
        G, constructor = _make_constructor(args)
        out["n"] = G.n
        out["min_paths"] = connectivity_lower_bound_via_paths(G, constructor)
        if args.cross_check:
            cert = vertex_connectivity(G)
            out["flow"] = cert.to_json()
            out["agreement"] = out["min_paths"] <= cert.kappa
            if not out["agreement"]:
                raise ValueError("path bound exceeds max-flow connectivity")
    _emit(out, args)
    return EXIT_OK


def _cmd_paths(args) -> int:
    G, constructor = _make_constructor(args)
    ps = constructor(args.u, args.v)
    ok, why = verify_path_system(G, ps)
    if not ok:
        raise ValueError(f"constructed system failed verification: {why}")
    payload = ps.to_json()
    payload["schema"] = "1"
    payload["count"] = len(ps)
    _emit(payload, args)
    return EXIT_OK


def _cmd_theorem17(args) -> int:
    G = _load_graph(args)
    lists = None
    if args.lists:
        raw = json.loads(_read_source(args.lists))
        lists = {v: tuple(raw[v]) for v in range(len(raw))}
    start = time.perf_counter()
    report = certify_distinguishing_bound(
        G, args.r, lists=lists, seed=args.seed,
        budget=Budget(args.budget, what="bound pipeline"),
    )
    report.timing_seconds = round(time.perf_counter() - start, 6)
    _emit(report.to_json(), args)
    if not report.hypotheses_pass:
        print(f"hypothesis failed: {report.failed_hypothesis()}", file=sys.stderr)
        return EXIT_HYPOTHESIS_FAILED
    return EXIT_OK


def _cmd_chi_d(args) -> int:
    G = _load_graph(args)
    value, witness = chi_D(G, Budget(args.budget, what="chi_D"))
    _emit({"schema": "1", "n": G.n, "chi_d": value, "witness": witness}, args)
    return EXIT_OK


# -- parser --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="distkit", description=__doc__)
    parser.add_argument("--threads", type=int, default=1,
                        help="worker count (only 1 is implemented; kept for interface stability)")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="emit a named graph family member")
    gen_sub = gen.add_subparsers(dest="kind", required=True)
    for kind in ("complete", "cycle"):
        p = gen_sub.add_parser(kind)
        p.add_argument("--n", type=int, required=True)
    p = gen_sub.add_parser("cycle-power")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p = gen_sub.add_parser("circulant")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--connection", required=True, metavar="CSV",
                   help="comma-separated connection offsets in 1..n//2")
    p = gen_sub.add_parser("paley")
    p.add_argument("--q", type=int, required=True)
    p = gen_sub.add_parser("dihedral")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--F", metavar="CSV", help="reflection exponents (default 0..m-k-1)")
    p = gen_sub.add_parser("family")
    p.add_argument("--tag", required=True, choices=families.FAMILY_TAGS)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=None, help="dihedral k for tag G3")
    p.add_argument("--F", metavar="CSV", help="dihedral reflection exponents for tag G3")
    for _, sp in gen_sub.choices.items():
        sp.add_argument("--format", choices=("graph6", "json"), default="graph6")
        sp.add_argument("-o", "--output")
    gen.set_defaults(func=_cmd_generate)

    inv = sub.add_parser("invariants", help="exact invariants with witnesses")
    _add_graph_source(inv)
    inv.add_argument("--alpha", action="store_true")
    inv.add_argument("--kappa", action="store_true")
    inv.add_argument("--chi", action="store_true")
    inv.add_argument("--chi-d", action="store_true", dest="chi_d")
    inv.add_argument("--bigraph-free", type=int, metavar="R", dest="bigraph_free")
    inv.add_argument("--budget", type=int, default=None)
    inv.add_argument("-o", "--output")
    inv.set_defaults(func=_cmd_invariants)

    cert = sub.add_parser("certify-connectivity",
                          help="connectivity certificates via paths or max-flow")
    cert.add_argument("--constructor", required=True, choices=("circulant", "dihedral", "flow"))
    cert.add_argument("--n", type=int, help="circulant order")
    cert.add_argument("--t", type=int, help="circulant power")
    cert.add_argument("--m", type=int, help="dihedral half-order")
    cert.add_argument("--k", type=int, help="dihedral omitted reflections")
    cert.add_argument("--F", metavar="CSV", help="dihedral reflection exponents")
    cert.add_argument("--cross-check", action="store_true",
                      help="also run max-flow and assert the path bound is below it")
    group = cert.add_mutually_exclusive_group()
    group.add_argument("--graph6", metavar="TEXT")
    group.add_argument("--graph6-file", metavar="PATH")
    group.add_argument("--json-file", metavar="PATH")
    cert.add_argument("-o", "--output")
    cert.set_defaults(func=_cmd_certify_connectivity)

    pth = sub.add_parser("paths", help="one verified internally-disjoint path system")
    pth.add_argument("--constructor", required=True, choices=("circulant", "dihedral"))
    pth.add_argument("--n", type=int)
    pth.add_argument("--t", type=int)
    pth.add_argument("--m", type=int)
    pth.add_argument("--k", type=int)
    pth.add_argument("--F", metavar="CSV")
    pth.add_argument("--u", type=int, required=True)
    pth.add_argument("--v", type=int, required=True)
    pth.add_argument("-o", "--output")
    pth.set_defaults(func=_cmd_paths)

    thm = sub.add_parser("theorem17", help="hypothesis checks plus the certified bounded coloring")
    _add_graph_source(thm)
    thm.add_argument("--r", type=int, required=True)
    thm.add_argument("--seed", type=int, default=None)
    thm.add_argument("--budget", type=int, default=None)
    thm.add_argument("--lists", metavar="PATH", help="JSON array of per-vertex color lists")
    thm.add_argument("-o", "--output")
    thm.set_defaults(func=_cmd_theorem17)

    chd = sub.add_parser("chi-d", help="exact distinguishing chromatic number")
    _add_graph_source(chd)
    chd.add_argument("--budget", type=int, default=None)
    chd.add_argument("-o", "--output")
    chd.set_defaults(func=_cmd_chi_d)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads != 1:
        print("distkit: threads > 1 not implemented; running sequentially", file=sys.stderr)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"distkit: budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"distkit: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

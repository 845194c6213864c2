"""Command-line front end.

Exit codes: 0 success or true, 1 property false or nothing found, 2 usage or
input error, 3 search budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import __version__
from .classify import (
    InconsistentVerdict,
    bisuperedges,
    crossed_size,
    cyclic_matching_run_size,
    cyclic_minedges,
    interval_chromatic_number,
    is_nested,
    is_separable,
    linked_parameters,
    minedges,
    ssat_verdict,
    superedges,
    verdict,
)
from .embed import contains
from .graphcore import FAMILIES, CyclicGraph, GraphFormatError, generate, read_graph, serialize, write_graph
from .saturate import (
    PreconditionError,
    blowup,
    cyclic_linear_host,
    greedy_saturate,
    is_saturating,
    is_semisaturating,
    is_witness,
    linear_host,
    semisat_host,
    semisat_host_cyclic,
)
from .search import (
    BudgetExhausted,
    DEFAULT_NODES,
    SearchBudget,
    exact_sat,
    exact_ssat,
    load_certificate,
    load_certificates,
    save_certificate,
    search_witness,
)

OK, FALSE, USAGE, BUDGET = 0, 1, 2, 3


class _Out:
    def __init__(self, as_json: bool):
        self.as_json = as_json
        self.color = sys.stdout.isatty() and "NO_COLOR" not in os.environ

    def flag(self, value: bool) -> str:
        word = "yes" if value else "no"
        if not self.color:
            return word
        return f"\033[{32 if value else 31}m{word}\033[0m"

    def emit(self, payload: dict, text: str) -> None:
        if self.as_json:
            print(json.dumps(payload, sort_keys=True))
        else:
            print(text.rstrip("\n"))


def _graph_dict(g) -> dict:
    return {"kind": g.kind, "n": g.n, "edges": [list(e) for e in g.edges]}


def _embedding(emb):
    return None if emb is None else list(emb.images)


# --------------------------------------------------------------------------
# Subcommands
# --------------------------------------------------------------------------


def cmd_gen(args, out: _Out) -> int:
    params = [p for chunk in args.params for p in chunk.split(",") if p]
    g = generate(args.family, *params, cyclic=True if args.cyclic else None)
    if args.output:
        write_graph(g, args.output)
    out.emit(_graph_dict(g), serialize(g))
    return OK


def cmd_contains(args, out: _Out) -> int:
    host, pattern = read_graph(args.host), read_graph(args.pattern)
    emb = contains(host, pattern)
    text = "no copy" if emb is None else "copy at " + " ".join(map(str, emb.images))
    out.emit({"contains": emb is not None, "embedding": _embedding(emb)}, text)
    return OK if emb is not None else FALSE


def _predicates(g) -> dict:
    info: dict = {"interval_chromatic_number": interval_chromatic_number(g)}
    if isinstance(g, CyclicGraph):
        info["cyclic_minedges"] = [list(e) for e in cyclic_minedges(g)]
        info["bisuperedges"] = [list(e) for e in bisuperedges(g)]
        info["matching_run_size"] = cyclic_matching_run_size(g)
        info["crossed_size"] = crossed_size(g)
        return info
    info["minedges"] = [list(e) for e in minedges(g)]
    info["superedges"] = [list(e) for e in superedges(g)]
    info["separable_at"] = is_separable(g)
    nested = is_nested(g)
    info["nested"] = None if nested is None else [[list(e) for e in part] for part in nested]
    info["linked_parameters"] = linked_parameters(g)
    return info


def cmd_classify(args, out: _Out) -> int:
    g = read_graph(args.graph)
    certs = load_certificates(args.certs) if args.certs else []
    info = _predicates(g) if g.edges else {}
    sat = verdict(g, certs)
    payload = {"graph": _graph_dict(g), "predicates": info, "sat": sat.to_dict()}
    lines = [f"{g.kind} graph, {g.n} vertices, {g.m} edges"]
    lines += [f"  {key}: {value}" for key, value in info.items()]
    lines.append(f"sat:  {sat.status.value}  [{', '.join(sat.rule_ids) or 'no rule'}]")
    if g.edges:
        ssat = ssat_verdict(g)
        payload["ssat"] = ssat.to_dict()
        lines.append(f"ssat: {ssat.status.value}  [{', '.join(ssat.rule_ids)}]")
    out.emit(payload, "\n".join(lines))
    return OK


def cmd_verify_host(args, out: _Out) -> int:
    host, pattern = read_graph(args.host), read_graph(args.pattern)
    check = (is_saturating if args.mode == "sat" else is_semisaturating)(host, pattern)
    label = "saturating" if args.mode == "sat" else "semisaturating"
    text = f"{label}: {out.flag(check.ok)} ({check.edge_count} edges)"
    if check.failing_edge:
        text += f"\n  adding {check.failing_edge} creates no copy"
    if check.embedding:
        text += "\n  host already contains a copy at " + " ".join(map(str, check.embedding.images))
    out.emit(check.to_dict(), text)
    return OK if check.ok else FALSE


def cmd_verify_witness(args, out: _Out) -> int:
    host, pattern = read_graph(args.witness), read_graph(args.pattern)
    cert = is_witness(host, pattern, args.matching)
    if cert is None:
        out.emit({"ok": False}, f"witness: {out.flag(False)}")
        return FALSE
    out.emit({"ok": True, "anchor": cert.isolated_anchor, "matching_mode": cert.matching_mode},
             f"witness: {out.flag(True)} (anchor at vertex {cert.isolated_anchor})")
    return OK


def cmd_construct(args, out: _Out) -> int:
    g = read_graph(args.graph)
    if args.which == "linear":
        if isinstance(g, CyclicGraph):
            raise PreconditionError("linear construction needs an ordered graph; use 'construct cyclic'")
        host = linear_host(g, args.n)
    elif args.which == "cyclic":
        host = cyclic_linear_host(g if isinstance(g, CyclicGraph) else g.to_cyclic(), args.n)
    else:
        build = semisat_host_cyclic if isinstance(g, CyclicGraph) else semisat_host
        host = build(g, args.n)
    if args.output:
        write_graph(host, args.output)
    out.emit(_graph_dict(host), serialize(host))
    return OK


def cmd_sat_exact(args, out: _Out) -> int:
    g = read_graph(args.graph)
    solve = exact_ssat if args.ssat else exact_sat
    res = solve(g, args.n, max_nodes=args.max_nodes, workers=args.threads)
    payload = {"value": res.value, "nodes": res.nodes, "host": _graph_dict(res.host)}
    out.emit(payload, f"{res.value}")
    return OK


def cmd_search_witness(args, out: _Out) -> int:
    g = read_graph(args.graph)
    budget = SearchBudget(args.max_vertices, args.max_edges, args.max_nodes, args.strategy)
    cert = search_witness(g, budget, True if args.matching else None)
    if cert is None:
        out.emit({"found": False}, "no witness within budget")
        return FALSE
    if args.output:
        save_certificate(cert, args.output)
    payload = {"found": True, "anchor": cert.isolated_anchor, "matching_mode": cert.matching_mode,
               "witness": _graph_dict(cert.witness)}
    out.emit(payload, f"# anchor {cert.isolated_anchor}\n" + serialize(cert.witness))
    return OK


def cmd_blowup(args, out: _Out) -> int:
    cert = load_certificate(args.cert)
    host = blowup(cert, args.n)
    if not args.raw:
        host = greedy_saturate(host, cert.pattern)
    if args.output:
        write_graph(host, args.output)
    out.emit(_graph_dict(host), serialize(host))
    return OK


# --------------------------------------------------------------------------
# Parser
# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS, help="worker processes for search")

    p = argparse.ArgumentParser(prog="ordsat", description="Saturation tools for ordered and cyclic graphs.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--threads", type=int, default=1, help="worker processes for search")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("gen", parents=[common], help="emit a family member as .og")
    s.add_argument("family", choices=sorted(FAMILIES))
    s.add_argument("params", nargs="*", help="integers; comma lists allowed (gamma-linked 0,1,0)")
    s.add_argument("--cyclic", action="store_true", help="emit the cyclic version")
    s.add_argument("-o", "--output", type=Path)
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("contains", parents=[common], help="find a copy of a pattern in a host")
    s.add_argument("host", type=Path)
    s.add_argument("pattern", type=Path)
    s.set_defaults(func=cmd_contains)

    s = sub.add_parser("classify", parents=[common], help="structural predicates and verdicts")
    s.add_argument("graph", type=Path)
    s.add_argument("--certs", type=Path, help="directory of witness certificates")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("verify-host", parents=[common], help="check a saturating or semisaturating host")
    s.add_argument("host", type=Path)
    s.add_argument("pattern", type=Path)
    s.add_argument("--mode", choices=("sat", "ssat"), default="sat")
    s.set_defaults(func=cmd_verify_host)

    s = sub.add_parser("verify-witness", parents=[common], help="check a witness host")
    s.add_argument("witness", type=Path)
    s.add_argument("pattern", type=Path)
    s.add_argument("--matching", action="store_true", help="single isolated anchor vertex")
    s.set_defaults(func=cmd_verify_witness)

    s = sub.add_parser("construct", parents=[common], help="build an explicit host")
    s.add_argument("which", choices=("linear", "cyclic", "ssat"))
    s.add_argument("graph", type=Path)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("-o", "--output", type=Path)
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("sat-exact", parents=[common], help="exact (semi)saturation number")
    s.add_argument("graph", type=Path)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--ssat", action="store_true")
    s.add_argument("--max-nodes", type=int, default=DEFAULT_NODES)
    s.set_defaults(func=cmd_sat_exact)

    s = sub.add_parser("search-witness", parents=[common], help="bounded witness search")
    s.add_argument("graph", type=Path)
    s.add_argument("--strategy", choices=("full", "xshape", "xshape-template"), default="xshape")
    s.add_argument("--max-vertices", type=int, default=24)
    s.add_argument("--max-edges", type=int, default=12)
    s.add_argument("--max-nodes", type=int, default=DEFAULT_NODES)
    s.add_argument("--matching", action="store_true", help="force a single anchor vertex")
    s.add_argument("-o", "--output", type=Path, help="certificate stem; writes STEM.og and STEM.json")
    s.set_defaults(func=cmd_search_witness)

    s = sub.add_parser("blowup", parents=[common], help="blow up a certificate and saturate greedily")
    s.add_argument("cert", type=Path, help="certificate .og or .json")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--raw", action="store_true", help="skip greedy saturation")
    s.add_argument("-o", "--output", type=Path)
    s.set_defaults(func=cmd_blowup)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    out = _Out(args.json)
    try:
        return args.func(args, out)
    except BudgetExhausted as exc:
        out.emit({"error": "budget_exhausted", "nodes": exc.nodes}, f"budget exhausted after {exc.nodes} nodes")
        return BUDGET
    except (GraphFormatError, PreconditionError, InconsistentVerdict, ValueError, TypeError, OSError) as exc:
        print(f"ordsat: error: {exc}", file=sys.stderr)
        return USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

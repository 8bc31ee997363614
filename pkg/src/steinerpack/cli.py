"""Command-line front end.

Subcommands: compute (kappa/lambda values and profiles), pack (spanning
tree packing), construct (family graphs), formula (closed forms and
lower bounds), verify (brute force against the closed forms).  Machine
output is JSON on stdout, graphs travel as graph6, diagnostics go to
stderr.  Exit codes: 0 ok, 1 input error, 2 budget exhausted, 3
regime/cap error, 4 verification mismatch.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from fractions import Fraction
from typing import Optional

from .errors import BudgetExceededError, GraphInputError, RegimeError
from .families import (
    FamilySpec,
    build_family,
    f_closed_form,
    h_from_f,
    k3_lower_bound,
    remark_lower_bound,
)
from .graphs import Graph, bits, mask_of, parse_graph6, write_graph6
from .search import brute_force_extremal
from .spanning import PackingCertificate, max_spanning_tree_packing, validate_packing
from .steiner import DEFAULT_BUDGET, kappa_S, lambda_S, profile

SCHEMA = "steiner-pack/1"

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_BUDGET = 2
EXIT_REGIME = 3
EXIT_MISMATCH = 4


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; remap to the input-error code."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _parse_vertices(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t != ""]
    except ValueError:
        raise GraphInputError(f"bad vertex list {text!r}")


def _parse_edges(text: str) -> list[tuple[int, int]]:
    out = []
    for item in text.split(","):
        if not item:
            continue
        parts = item.split("-")
        if len(parts) != 2:
            raise GraphInputError(f"bad edge {item!r} (use u-v)")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphInputError(f"bad edge {item!r}")
        out.append((u, v))
    return out


def _parse_l_range(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        try:
            return list(range(int(lo), int(hi) + 1))
        except ValueError:
            raise GraphInputError(f"bad range {text!r}")
    try:
        return [int(text)]
    except ValueError:
        raise GraphInputError(f"bad tree budget {text!r}")


def _parse_k(text: str, n: int) -> int:
    if text == "n":
        return n
    if text == "n-1":
        return n - 1
    try:
        return int(text)
    except ValueError:
        raise GraphInputError(f"bad terminal size {text!r}")


def _family_spec(args) -> FamilySpec:
    if args.n is None:
        raise GraphInputError("--family needs --n")
    return FamilySpec(
        family=args.family,
        n=args.n,
        l=args.l if args.l is not None else 0,
        k=getattr(args, "k_int", 0) or 0,
        m=tuple(_parse_edges(args.m)) if getattr(args, "m", None) else (),
        attach=tuple(_parse_vertices(args.attach)) if getattr(args, "attach", None) else (),
        attach2=tuple(_parse_vertices(args.attach2))
        if getattr(args, "attach2", None)
        else (),
    )


def _load_graph(args) -> Graph:
    sources = [
        args.graph6 is not None,
        args.file is not None,
        getattr(args, "family", None) is not None,
    ]
    if sum(sources) != 1:
        raise GraphInputError("provide exactly one of --graph6, --file, --family")
    if args.graph6 is not None:
        return parse_graph6(args.graph6)
    if args.file is not None:
        if args.file == "-":
            text = sys.stdin.read()
        else:
            try:
                with open(args.file, "r", encoding="ascii") as fh:
                    text = fh.read()
            except OSError as exc:
                raise GraphInputError(f"cannot read {args.file}: {exc}")
        for line in text.splitlines():
            if line.strip():
                return parse_graph6(line.strip())
        raise GraphInputError(f"no graph6 line in {args.file}")
    spec = _family_spec(args)
    if spec.family == "remark":
        k = _parse_k(args.k, spec.n) if args.k else 0
        spec = dataclasses.replace(spec, k=k)
    return build_family(spec)


def _cert_json(cert: PackingCertificate) -> dict:
    return {
        "mode": cert.mode,
        "terminals": list(bits(cert.terminals)),
        "trees": [
            {"edges": sorted([u, v] for u, v in t.edges)} for t in cert.trees
        ],
    }


def _emit(payload: dict, output: Optional[str]) -> None:
    text = json.dumps(payload, indent=2) + "\n"
    if output and output != "-":
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _config_dict(args, keys) -> dict:
    out = {}
    for key in keys:
        val = getattr(args, key, None)
        if val is not None:
            out[key] = val
    return out


# -- command handlers -----------------------------------------------------


def cmd_compute(args) -> int:
    g = _load_graph(args)
    budget = args.budget
    if args.S is not None:
        verts = _parse_vertices(args.S)
        smask = mask_of(verts)
        if args.k is not None and _parse_k(args.k, g.n) != len(verts):
            raise GraphInputError("--k disagrees with the size of --S")
        fn = kappa_S if args.mode == "vertex" else lambda_S
        value, cert = fn(g, smask, budget)
        ok, why = validate_packing(g, cert)
        if not ok:
            raise GraphInputError(f"internal certificate validation failed: {why}")
        result = {
            "kind": "local",
            "mode": args.mode,
            "S": sorted(verts),
            "value": value,
            "certificate": _cert_json(cert),
        }
    else:
        if args.k is None:
            raise GraphInputError("compute needs --k or --S")
        k = _parse_k(args.k, g.n)
        prof = profile(g, k, args.mode, budget)
        result = {
            "kind": "profile",
            "mode": args.mode,
            "k": k,
            "min": prof.min_value,
            "max": prof.max_value,
            "argmin": list(bits(prof.argmin_set)),
            "argmax": list(bits(prof.argmax_set)),
        }
    _emit(
        {
            "schema": SCHEMA,
            "command": "compute",
            "config": _config_dict(
                args, ["graph6", "file", "family", "n", "l", "k", "S", "mode", "budget"]
            ),
            "graph6": write_graph6(g),
            "result": result,
        },
        args.output,
    )
    return EXIT_OK


def cmd_pack(args) -> int:
    g = _load_graph(args)
    value, cert = max_spanning_tree_packing(g)
    ok, why = validate_packing(g, cert)
    if not ok:
        raise GraphInputError(f"internal certificate validation failed: {why}")
    _emit(
        {
            "schema": SCHEMA,
            "command": "pack",
            "config": _config_dict(args, ["graph6", "file", "family", "n", "l"]),
            "graph6": write_graph6(g),
            "result": {"count": value, "certificate": _cert_json(cert)},
        },
        args.output,
    )
    return EXIT_OK


def cmd_construct(args) -> int:
    spec = _family_spec(args)
    if spec.family == "remark":
        spec = dataclasses.replace(spec, k=_parse_k(args.k, spec.n) if args.k else 0)
    try:
        g = build_family(spec)
    except GraphInputError as exc:
        raise RegimeError(str(exc))
    _emit(
        {
            "schema": SCHEMA,
            "command": "construct",
            "config": _config_dict(args, ["family", "n", "l", "k", "m", "attach", "attach2"]),
            "result": {
                "graph6": write_graph6(g),
                "n": g.n,
                "edges": g.edge_count(),
                "min_degree": g.min_degree(),
                "max_degree": g.max_degree(),
            },
        },
        args.output,
    )
    return EXIT_OK


def cmd_formula(args) -> int:
    n = args.n
    k = _parse_k(args.k, n)
    l = args.l
    value = regime = None
    try:
        res = f_closed_form(n, k, l, args.mode)
        value, regime = res.value, res.regime
    except RegimeError:
        pass
    bounds = []
    try:
        bounds.append(
            {"source": "general-k-construction", "value": remark_lower_bound(n, k, l)}
        )
    except RegimeError:
        pass
    if k == 3:
        try:
            lb = k3_lower_bound(n, l)
            bounds.append(
                {
                    "source": "k3-construction",
                    "value": str(lb) if isinstance(lb, Fraction) else lb,
                }
            )
        except RegimeError:
            pass
    if value is None and not bounds:
        raise RegimeError(f"no formula or bound applies to n={n} k={k} l={l}")
    result = {"value": value, "regime": regime, "lower_bound": bounds}
    if value is not None:
        result["h_plus_one"] = h_from_f(value)
    _emit(
        {
            "schema": SCHEMA,
            "command": "formula",
            "config": {"n": n, "k": args.k, "l": l, "mode": args.mode},
            "result": result,
        },
        args.output,
    )
    return EXIT_OK


def cmd_verify(args) -> int:
    n = args.n
    k = _parse_k(args.k, n)
    reports = []
    mismatch = False
    incomplete = False
    for l in _parse_l_range(args.l):
        rep = brute_force_extremal(n, k, l, args.mode, args.budget, args.jobs)
        if rep.status != "complete":
            incomplete = True
        if (
            rep.formula_value is not None
            and rep.brute_value is not None
            and rep.formula_value != rep.brute_value
        ):
            mismatch = True
        entry = {
            "n": rep.n,
            "k": rep.k,
            "l": rep.l,
            "mode": rep.mode,
            "brute_value": rep.brute_value,
            "formula_value": rep.formula_value,
            "witnesses": list(rep.witnesses),
            "characterization_match": rep.characterization_match,
            "graphs_scanned": rep.graphs_scanned,
            "status": rep.status,
        }
        if args.timing:
            entry["elapsed_seconds"] = round(rep.elapsed_seconds, 3)
        reports.append(entry)
    _emit(
        {
            "schema": SCHEMA,
            "command": "verify",
            "config": {
                "n": n,
                "k": args.k,
                "l": args.l,
                "mode": args.mode,
                "jobs": args.jobs,
            },
            "reports": reports,
        },
        args.output,
    )
    if incomplete:
        return EXIT_BUDGET
    if mismatch:
        return EXIT_MISMATCH
    return EXIT_OK


# -- parser ----------------------------------------------------------------


def _add_graph_source(p: argparse.ArgumentParser) -> None:
    p.add_argument("--graph6", help="graph6 string")
    p.add_argument("--file", help="path to a graph6 file, or - for stdin")
    p.add_argument(
        "--family",
        choices=["Gn", "Hn", "Kn", "KnMinusM", "remark"],
        help="construct the input graph from a family",
    )
    p.add_argument("--n", type=int, help="family order")
    p.add_argument("--l", type=int, help="family attachment budget")
    p.add_argument("--m", help="edges to delete for KnMinusM, e.g. 0-1,2-3")
    p.add_argument("--attach", help="explicit attachment set, e.g. 0,1")
    p.add_argument("--attach2", help="second attachment set (Hn)")


def build_parser() -> argparse.ArgumentParser:
    top = _Parser(prog="steinerpack", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[], help="kappa/lambda values and profiles")
    _add_graph_source(p)
    p.add_argument("--k", help="terminal set size (int, n or n-1)")
    p.add_argument("--S", help="explicit terminal set, e.g. 0,3")
    p.add_argument("--mode", choices=["vertex", "edge"], default="vertex")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--output", help="output path (default stdout)")
    p.set_defaults(handler=cmd_compute)

    p = sub.add_parser("pack", help="maximum edge-disjoint spanning tree packing")
    _add_graph_source(p)
    p.add_argument("--k", help=argparse.SUPPRESS)
    p.add_argument("--output")
    p.set_defaults(handler=cmd_pack)

    p = sub.add_parser("construct", help="emit a family graph as graph6")
    _add_graph_source(p)
    p.add_argument("--k", help="terminal size for the remark family")
    p.add_argument("--output")
    p.set_defaults(handler=cmd_construct)

    p = sub.add_parser("formula", help="closed-form values and lower bounds")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", required=True, help="int, n or n-1")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--mode", choices=["vertex", "edge"], default="vertex")
    p.add_argument("--output")
    p.set_defaults(handler=cmd_formula)

    p = sub.add_parser("verify", help="brute force vs closed forms")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", required=True, help="int, n or n-1")
    p.add_argument("--l", required=True, help="single value or range lo..hi")
    p.add_argument("--mode", choices=["vertex", "edge"], default="vertex")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--timing", action="store_true", help="include elapsed time")
    p.add_argument("--output")
    p.set_defaults(handler=cmd_verify)

    return top


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except GraphInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceededError as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except RegimeError as exc:
        print(f"unsupported regime: {exc}", file=sys.stderr)
        return EXIT_REGIME


if __name__ == "__main__":
    sys.exit(main())

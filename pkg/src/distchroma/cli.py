"""Command-line front end: ``distchroma {gen,bounds,verify,chroma,table,export}``.

Exit codes: 0 success, 1 claim failure, 2 usage or parse error, 3 inconclusive
(solver budget exhausted).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .bounds import (
    BOUNDS_COLUMNS,
    FAMILIES,
    bounds_record,
    bounds_rows,
    construction_counts,
    girth_thresholds,
    tau_edge,
    to_csv,
)
from .claims import FAIL, INCONCLUSIVE, check_claim, shift_radii, threshold_claims
from .colouring import DEFAULT_BUDGET, distance_chromatic_index, distance_chromatic_number
from .constructions import build
from .graphs import EDGE, VERTEX
from .io import dumps_graph, load_graph, to_dot

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INCONCLUSIVE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def parse_range(text: str) -> list[int]:
    """``"3"``, ``"1..4"``, ``"1-4"`` or ``"4,6,8"``."""
    out: list[int] = []
    try:
        for part in text.split(","):
            part = part.strip()
            sep = ".." if ".." in part else ("-" if "-" in part[1:] else None)
            if sep:
                lo, hi = part.split(sep)
                out.extend(range(int(lo), int(hi) + 1))
            else:
                out.append(int(part))
    except ValueError as exc:
        raise UsageError(f"cannot parse range {text!r}") from exc
    return out


def _one(text: Optional[str], name: str) -> Optional[int]:
    if text is None:
        return None
    vals = parse_range(text)
    if len(vals) != 1:
        raise UsageError(f"--{name} takes a single integer here, got {text!r}")
    return vals[0]


def _params(args) -> dict:
    return {
        "t": _one(args.t, "t"),
        "d": _one(args.d, "d"),
        "k": _one(args.k, "k"),
        "ell": _one(args.ell, "ell"),
        "n": _one(args.n, "n"),
    }


def _build(args):
    try:
        return build(args.family, **_params(args))
    except (ValueError, ArithmeticError) as exc:
        raise UsageError(f"{args.family}: {exc}") from exc


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load(path: str):
    try:
        return load_graph(path)
    except (OSError, ValueError) as exc:
        raise UsageError(str(exc)) from exc


def _solver_threads() -> int:
    raw = os.environ.get("DISTCHROMA_THREADS")
    if raw is None:
        return 1
    try:
        cap = int(raw)
    except ValueError:
        cap = 0
    if cap < 1:
        raise UsageError(f"DISTCHROMA_THREADS must be a positive integer, got {raw!r}")
    # the search is sequential, which satisfies every cap
    return 1


def cmd_gen(args) -> int:
    g, desc = _build(args)
    _emit(dumps_graph(g, desc), args.out)
    return EXIT_OK


def cmd_bounds(args) -> int:
    t, d = _one(args.t, "t"), _one(args.d, "d")
    if t is None or d is None:
        raise UsageError("bounds needs --t and --d")
    try:
        rec, th = bounds_record(t, d), girth_thresholds(t)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    data = {**rec.__dict__, "girth_thresholds": th.__dict__}
    if args.json:
        _emit(json.dumps(data, sort_keys=True) + "\n", args.out)
    else:
        lines = [f"{k}: {v}" for k, v in rec.__dict__.items()]
        lines += [f"{k}: {'absent' if v is None else v}" for k, v in th.__dict__.items() if k != "t"]
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    _solver_threads()
    if args.input:
        g, desc = _load(args.input)
    elif args.family:
        g, desc = _build(args)
    else:
        raise UsageError("verify needs a family or --input")
    if desc is not None:
        claims = shift_radii(desc.claims, args.radius_shift)
        results = [check_claim(g, c, args.budget) for c in claims]
    else:
        t = _one(args.t, "t")
        if t is None:
            raise UsageError("verify on a plain graph needs --t")
        results = threshold_claims(g, t, args.budget)
    statuses = [r.status for r in results]
    code = EXIT_FAIL if FAIL in statuses else EXIT_INCONCLUSIVE if INCONCLUSIVE in statuses else EXIT_OK
    if args.json:
        payload = {"results": [r.__dict__ for r in results], "exit": code}
        _emit(json.dumps(payload, sort_keys=True) + "\n", args.out)
    else:
        lines = [f"{r.status.upper():12s} {r.claim}  ({r.detail})" for r in results]
        _emit("\n".join(lines) + "\n", args.out)
    return code


def cmd_chroma(args) -> int:
    _solver_threads()
    g, _ = _load(args.input)
    t = _one(args.t, "t")
    if t is None or t < 1:
        raise UsageError("chroma needs --t >= 1")
    solve = distance_chromatic_index if args.kind == EDGE else distance_chromatic_number
    report = solve(g, t, args.budget)
    if args.json:
        _emit(json.dumps({"kind": args.kind, "t": t, **report.to_dict()}, sort_keys=True) + "\n", args.out)
    else:
        sym = "chi'" if args.kind == EDGE else "chi"
        if report.exact:
            head = f"{sym}_{t} = {report.value}"
        else:
            head = f"{report.lower_bound} <= {sym}_{t} <= {report.upper_bound}"
        _emit(f"{head}  [{report.status}, {report.nodes} nodes, clique {len(report.clique)}]\n", args.out)
    return EXIT_OK if report.exact else EXIT_INCONCLUSIVE


def ratio_rows(ds: Sequence[int]) -> list[dict]:
    """Edge counts of the octahedron and Shannon families over tree bounds, per even d."""
    rows = []
    for d in ds:
        if d % 2 or d < 6:
            continue
        oct_edges = construction_counts("octahedron", d=d)[1]
        sh_edges = construction_counts("shannon", d=d)[1]
        r_oct = Fraction(oct_edges, tau_edge(2, d))
        r_sh = Fraction(sh_edges, tau_edge(1, d))
        rows.append(
            {
                "d": d,
                "octahedron_edges": oct_edges,
                "tau_edge_2": tau_edge(2, d),
                "octahedron_ratio": str(r_oct),
                "octahedron_ratio_decimal": f"{float(r_oct):.4f}",
                "shannon_edges": sh_edges,
                "tau_edge_1": tau_edge(1, d),
                "shannon_ratio": str(r_sh),
                "label": "lower-bound witness",
            }
        )
    return rows


RATIO_COLUMNS = (
    "d",
    "octahedron_edges",
    "tau_edge_2",
    "octahedron_ratio",
    "octahedron_ratio_decimal",
    "shannon_edges",
    "tau_edge_1",
    "shannon_ratio",
    "label",
)


def cmd_table(args) -> int:
    ts = parse_range(args.t) if args.t else [1, 2, 3]
    ds = parse_range(args.d) if args.d else [3, 4, 5]
    try:
        if args.kind == "bounds":
            text = to_csv(bounds_rows(ts, ds), BOUNDS_COLUMNS)
        elif args.kind == "ratios":
            text = to_csv(ratio_rows(ds), RATIO_COLUMNS)
        else:
            rows = [girth_thresholds(t).__dict__ for t in ts]
            cols = ("t", "edge_main", "edge_tradeoff", "tradeoff_min_degree", "vertex_main")
            text = to_csv([{c: r[c] for c in cols} for r in rows], cols)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    _emit(text, args.out)
    return EXIT_OK


def cmd_export(args) -> int:
    g, desc = _load(args.input)
    _emit(to_dot(g) if args.format == "dot" else dumps_graph(g, desc), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="distchroma", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p, family: str = "none"):
        for name in ("t", "d", "k", "ell", "n"):
            p.add_argument(f"--{name}")
        p.add_argument("--out", help="write output here instead of stdout")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        if family == "required":
            p.add_argument("family", choices=FAMILIES)
        elif family == "optional":
            p.add_argument("family", nargs="?", choices=FAMILIES)

    p = sub.add_parser("gen", help="generate a construction as JSON")
    common(p, "required")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bounds", help="tree bounds and girth thresholds for one (t, d)")
    common(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("verify", help="check the claims attached to a construction")
    common(p, "optional")
    p.add_argument("--input", help="graph JSON (claims come from its descriptor)")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--radius-shift", type=int, default=0, help="offset every clique-claim radius")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("chroma", help="exact distance chromatic index/number")
    common(p)
    p.add_argument("--input", required=True)
    p.add_argument("--kind", choices=(EDGE, VERTEX), default=EDGE)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_chroma)

    p = sub.add_parser("table", help="CSV tables")
    common(p)
    p.add_argument("kind", choices=("bounds", "ratios", "girth-thresholds"))
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("export", help="re-emit a graph as DOT or JSON")
    common(p)
    p.add_argument("--input", required=True)
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"distchroma {args.verb}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

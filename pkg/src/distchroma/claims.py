"""Checking descriptor claims and girth-threshold claims against a graph."""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterable, Optional

from .bounds import girth_thresholds, tau_edge, tau_vertex
from .colouring import (
    DEFAULT_BUDGET,
    distance_chromatic_index,
    distance_chromatic_number,
    exact_chromatic_number,
)
from .constructions import Claim
from .graphs import (
    EDGE,
    INFINITY,
    Multigraph,
    SimpleGraph,
    girth,
    is_clique,
    is_tree,
    line_graph,
    max_degree,
    power,
    underlying_simple,
)

PASS, FAIL, INCONCLUSIVE = "pass", "fail", "inconclusive"


@dataclass(frozen=True)
class ClaimResult:
    claim: str
    status: str
    detail: str = ""


def _induced(g: SimpleGraph, members: Iterable[int]) -> SimpleGraph:
    keep = list(members)
    index = {v: i for i, v in enumerate(keep)}
    return SimpleGraph(len(keep), [{index[w] for w in g.adj[v] if w in index} for v in keep])


def _fmt(x) -> str:
    return "inf" if x == INFINITY else str(x)


def check_claim(g: Multigraph, claim: Claim, budget: int = DEFAULT_BUDGET) -> ClaimResult:
    label = claim.label()
    name = claim.name
    if name in ("vertices", "edges", "max_degree", "girth", "is_tree"):
        actual = {
            "vertices": lambda: g.n,
            "edges": lambda: g.m,
            "max_degree": lambda: max_degree(g),
            "girth": lambda: girth(g),
            "is_tree": lambda: is_tree(g),
        }[name]()
        ok = actual == claim.expected
        return ClaimResult(label, PASS if ok else FAIL, f"actual {_fmt(actual)}")
    if name == "power_clique":
        if claim.radius is None or claim.radius < 1:
            return ClaimResult(label, FAIL, f"radius {claim.radius} gives no adjacency")
        base = line_graph(g) if claim.kind == EDGE else underlying_simple(g)
        h = power(base, claim.radius)
        if claim.members is not None:
            h = _induced(h, claim.members)
        ok = is_clique(h)
        return ClaimResult(label, PASS if ok else FAIL, f"{h.n} entities")
    if name == "chromatic_exceeds":
        solve = distance_chromatic_index if claim.kind == EDGE else distance_chromatic_number
        report = solve(g, claim.radius, budget)
        bound = int(claim.expected)
        detail = f"bounds [{report.lower_bound}, {report.upper_bound}], {report.nodes} nodes"
        if report.lower_bound > bound:
            return ClaimResult(label, PASS, detail)
        if report.upper_bound <= bound:
            return ClaimResult(label, FAIL, detail)
        return ClaimResult(label, INCONCLUSIVE, detail + " (budget exhausted)")
    raise ValueError(f"unknown claim {name!r}")


def shift_radii(claims: Iterable[Claim], shift: int) -> list[Claim]:
    return [
        replace(c, radius=c.radius + shift) if c.name == "power_clique" else c for c in claims
    ]


def threshold_claims(g: Multigraph, t: int, budget: int = DEFAULT_BUDGET) -> list[ClaimResult]:
    """Tree-like bound checks for a user graph, when a girth threshold applies.

    For odd t the edge thresholds apply (maximum degree at least 4, or at least
    t + 2 for the smaller threshold); for even t the vertex threshold applies.
    The graph is assumed planar; that is not checked.
    """
    d = max_degree(g)
    gi = girth(g)
    th = girth_thresholds(t)
    results: list[ClaimResult] = []
    applies: Optional[str] = None
    if th.edge_main is not None and d >= th.main_min_degree and gi >= th.edge_main:
        applies = f"girth {_fmt(gi)} >= {th.edge_main}"
    elif th.edge_tradeoff is not None and d >= th.tradeoff_min_degree and gi >= th.edge_tradeoff:
        applies = f"girth {_fmt(gi)} >= {th.edge_tradeoff} with max degree {d} >= {t + 2}"
    elif th.vertex_main is not None and d >= th.main_min_degree and gi >= th.vertex_main:
        applies = f"girth {_fmt(gi)} >= {th.vertex_main}"
    if applies is None:
        results.append(
            ClaimResult(f"girth threshold for t={t}", PASS, f"not applicable (girth {_fmt(gi)}, max degree {d})")
        )
        return results
    if t % 2:
        bound, label = tau_edge(t, d), f"chi'_{t} <= {tau_edge(t, d)}"
        h = power(line_graph(g), t)
    else:
        bound, label = tau_vertex(t, d), f"chi_{t} <= {tau_vertex(t, d)}"
        h = power(underlying_simple(g), t)
    report = exact_chromatic_number(h, budget)
    detail = f"{applies}; bounds [{report.lower_bound}, {report.upper_bound}]"
    if report.upper_bound <= bound:
        results.append(ClaimResult(label, PASS, detail))
    elif report.lower_bound > bound:
        results.append(ClaimResult(label, FAIL, detail))
    else:
        results.append(ClaimResult(label, INCONCLUSIVE, detail))
    return results

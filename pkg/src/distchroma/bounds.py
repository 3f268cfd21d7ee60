"""Closed-form tree bounds, girth thresholds and construction counts.

All arithmetic is exact integer arithmetic; every division by ``d - 2`` is
checked to leave no remainder.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Iterable, Optional


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{num} is not divisible by {den}")
    return q


def _check_td(t: int, d: int) -> None:
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    if d < 3:
        raise ValueError(f"d must be >= 3, got {d}")


def iota(k: int, d: int) -> int:
    """Edge count of the leaf-rooted internally d-regular tree of height k."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    if d < 3:
        raise ValueError(f"d must be >= 3, got {d}")
    return _exact_div((d - 1) ** k - 1, d - 2)


def tau_edge(t: int, d: int) -> int:
    """Largest distance-t chromatic index over trees of maximum degree d."""
    _check_td(t, d)
    if t % 2 == 0:
        return _exact_div(2 * (d - 1) ** (t // 2 + 1) - d, d - 2)
    return _exact_div(d * (d - 1) ** ((t + 1) // 2) - d, d - 2)


def tau_vertex(t: int, d: int) -> int:
    """Largest distance-t chromatic number over trees of maximum degree d."""
    _check_td(t, d)
    if t % 2 == 0:
        return _exact_div(d * (d - 1) ** (t // 2) - 2, d - 2)
    return _exact_div(2 * (d - 1) ** ((t + 1) // 2) - 2, d - 2)


@dataclass(frozen=True)
class BoundsRecord:
    t: int
    d: int
    tau_edge: int
    tau_vertex: int
    parity: str


def bounds_record(t: int, d: int) -> BoundsRecord:
    return BoundsRecord(t, d, tau_edge(t, d), tau_vertex(t, d), "even" if t % 2 == 0 else "odd")


@dataclass(frozen=True)
class GirthThresholds:
    """Proven girth thresholds for a distance ``t``.

    Edge thresholds exist only for odd ``t >= 3`` and the vertex threshold only
    for even ``t >= 2``; absent values are ``None``. ``edge_tradeoff`` needs
    maximum degree at least ``tradeoff_min_degree``. The main thresholds need
    maximum degree at least ``main_min_degree``.
    """

    t: int
    edge_main: Optional[int]
    edge_tradeoff: Optional[int]
    tradeoff_min_degree: Optional[int]
    vertex_main: Optional[int]
    main_min_degree: int = 4


def girth_thresholds(t: int) -> GirthThresholds:
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    if t % 2 == 1 and t >= 3:
        return GirthThresholds(t, 6 * (t * t + 2 * t - 1), 30 * t - 6, t + 2, None)
    if t % 2 == 0:
        return GirthThresholds(t, None, None, None, 6 * (t * t + t - 2))
    return GirthThresholds(t, None, None, None, None)


FAMILIES = (
    "tree_T",
    "extremal_tree_edge",
    "extremal_tree_vertex",
    "shannon",
    "octahedron",
    "shannon_hierarchy",
    "octahedron_hierarchy",
    "odd_cycle_edge_cert",
    "odd_cycle_vertex_cert",
    "path",
    "cycle",
)


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def _even_d(d: Optional[int], low: int) -> int:
    _require(d is not None, "parameter d is required")
    _require(d % 2 == 0 and d >= low, f"d must be even and >= {low}, got {d}")
    return d


def _k(k: Optional[int]) -> int:
    _require(k is not None and k >= 0, f"k must be >= 0, got {k}")
    return k


def odd_cycle_length(t: int, d: int) -> int:
    """The odd member of ``{(tau'-1)/2, (tau'+1)/2}`` for even ``t``."""
    te = tau_edge(t, d)
    lo, hi = (te - 1) // 2, (te + 1) // 2
    return lo if lo % 2 else hi


def construction_counts(
    family: str,
    t: Optional[int] = None,
    d: Optional[int] = None,
    k: Optional[int] = None,
    ell: Optional[int] = None,
    n: Optional[int] = None,
) -> tuple[int, int]:
    """Closed-form ``(vertices, edges)`` of the graph each generator builds.

    Raises ``ValueError`` naming the violated precondition for bad parameters.
    """
    if family == "tree_T":
        kk = _k(k)
        _require(d is not None and d >= 3, f"d must be >= 3, got {d}")
        e = iota(kk, d)
        return e + 1, e
    if family == "extremal_tree_edge":
        _require(t is not None and d is not None, "parameters t and d are required")
        e = tau_edge(t, d)
        return e + 1, e
    if family == "extremal_tree_vertex":
        _require(t is not None and d is not None, "parameters t and d are required")
        v = tau_vertex(t, d)
        return v, v - 1
    if family == "shannon":
        d = _even_d(d, 2)
        return 3, 3 * d // 2
    if family == "octahedron":
        d = _even_d(d, 6)
        return 3 * d - 6, 9 * d // 2 - 6
    if family == "shannon_hierarchy":
        d, kk = _even_d(d, 4), _k(k)
        p = (d - 1) ** kk
        return 3 * d // 2 * p + 3, 3 * d // 2 * (p + 1)
    if family == "octahedron_hierarchy":
        d, kk = _even_d(d, 6), _k(k)
        subdivisions = 3 * (d // 2 - 1)
        pendants = 3 * (d - 4)
        grown = (subdivisions * (d - 2) + pendants * (d - 1)) * iota(kk, d)
        return 9 * d // 2 - 9 + grown, 6 * d - 9 + grown
    if family == "odd_cycle_edge_cert":
        _require(t is not None and d is not None, "parameters t and d are required")
        _require(t >= 2 and t % 2 == 0, f"t must be even and >= 2, got {t}")
        _require(d >= 4, f"d must be >= 4, got {d}")
        length = odd_cycle_length(t, d)
        _require(length > t, f"cycle length {length} must exceed t={t}; increase d")
        size = length * (d - 1) ** (t // 2)
        return size, size
    if family == "odd_cycle_vertex_cert":
        _require(t is not None and d is not None, "parameters t and d are required")
        _require(t >= 1 and t % 2 == 1, f"t must be odd and >= 1, got {t}")
        _require(d >= 3, f"d must be >= 3, got {d}")
        _require(ell is not None, "parameter ell is required")
        _require(ell % 2 == 1 and ell >= t + 2, f"ell must be odd and >= t+2={t + 2}, got {ell}")
        size = ell * (d - 1) ** ((t - 1) // 2)
        return size, size
    if family == "path":
        _require(n is not None and n >= 1, f"path needs n >= 1, got {n}")
        return n, n - 1
    if family == "cycle":
        _require(n is not None and n >= 3, f"cycle needs n >= 3, got {n}")
        return n, n
    raise ValueError(f"unknown family {family!r}")


def stated_counts(family: str, d: int, k: int = 0) -> tuple[int, int]:
    """``(vertices, edges)`` from the quoted closed forms for the planar families.

    For the octahedron families these disagree with the counts the
    construction recipe produces; see the README.
    """
    if family == "shannon":
        return 3, 3 * d // 2
    if family == "octahedron":
        return 3 * d - 6, 9 * d // 2 - 3
    if family == "shannon_hierarchy":
        p = (d - 1) ** k
        return 3 * d // 2 * p + 3, 3 * d // 2 * (p + 1)
    if family == "octahedron_hierarchy":
        grown = (9 * d // 2 - 15) * ((d - 1) ** k - 1)
        return grown + 9 * d // 2 - 9, grown + 6 * (d - 1)
    raise ValueError(f"no stated counts for family {family!r}")


BOUNDS_COLUMNS = ("t", "d", "tau_edge", "tau_vertex", "edge_main", "vertex_main")


def bounds_rows(ts: Iterable[int], ds: Iterable[int]) -> list[dict]:
    ds = list(ds)
    rows = []
    for t in ts:
        g = girth_thresholds(t)
        for d in ds:
            rows.append(
                {
                    "t": t,
                    "d": d,
                    "tau_edge": tau_edge(t, d),
                    "tau_vertex": tau_vertex(t, d),
                    "edge_main": g.edge_main,
                    "vertex_main": g.vertex_main,
                }
            )
    return rows


def to_csv(rows: list[dict], columns: Iterable[str]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(columns), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: "" if v is None else v for k, v in row.items()})
    return buf.getvalue()

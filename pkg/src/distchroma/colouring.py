"""Greedy and exact distance colouring.

Distance-t edge colouring is always treated as vertex colouring of the t-th
power of the line graph, and distance-t vertex colouring as vertex colouring
of the t-th power of the underlying simple graph.
"""

from __future__ import annotations

import sys
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .graphs import (
    EDGE,
    VERTEX,
    AnyGraph,
    Multigraph,
    SimpleGraph,
    as_multigraph,
    bfs_distances,
    contraction_classes,
    contract_edges,
    degeneracy_order,
    is_clique,
    is_tree,
    line_graph,
    max_degree,
    max_matching_bruteforce,
    power,
    tutte_berge_min,
    underlying_simple,
)

DEFAULT_BUDGET = 10**7


@dataclass(frozen=True)
class Colouring:
    """Colours ``1, 2, ...`` for every edge (or vertex) id, indexed by id."""

    kind: str
    t: int
    colours: tuple[int, ...]

    @property
    def palette_size(self) -> int:
        return len(set(self.colours))

    def to_dict(self) -> dict:
        return {"kind": self.kind, "t": self.t, "colours": list(self.colours)}

    @classmethod
    def from_dict(cls, data: dict) -> Colouring:
        if data.get("kind") not in (EDGE, VERTEX):
            raise ValueError(f"colouring kind must be 'edge' or 'vertex', got {data.get('kind')!r}")
        return cls(data["kind"], int(data["t"]), tuple(int(c) for c in data["colours"]))


@dataclass(frozen=True)
class SolveReport:
    """Outcome of the exact solver.

    ``value`` is set only when ``status == "exact"``. ``clique`` is the
    lower-bound witness; ``lower_bound`` can exceed its size once smaller
    palettes have been refuted by search.
    """

    status: str
    value: Optional[int]
    lower_bound: int
    upper_bound: int
    clique: tuple[int, ...]
    colouring: tuple[int, ...]
    nodes: int

    @property
    def exact(self) -> bool:
        return self.status == "exact"

    def to_dict(self) -> dict:
        return {
            "status": self.status,
            "value": self.value,
            "lower_bound": self.lower_bound,
            "upper_bound": self.upper_bound,
            "clique": list(self.clique),
            "colours": list(self.colouring),
            "nodes": self.nodes,
        }


def greedy_colour(g: SimpleGraph, order: Sequence[int]) -> list[int]:
    """Give each vertex, in ``order``, the least colour unused by coloured neighbours."""
    if sorted(order) != list(range(g.n)):
        raise ValueError("order must be a permutation of the vertices")
    colour = [0] * g.n
    for v in order:
        taken = {colour[w] for w in g.adj[v]}
        c = 1
        while c in taken:
            c += 1
        colour[v] = c
    return colour


def bfs_edge_order(g: Multigraph, root: int = 0, root_kind: str = VERTEX) -> list[int]:
    """Edges of a tree by first traversal time, children taken in edge-id order.

    With ``root_kind="edge"`` the search starts from that edge, which comes first.
    """
    if not is_tree(g):
        raise ValueError("bfs_edge_order needs a tree")
    seen_v = [False] * g.n
    seen_e = [False] * g.m
    order: list[int] = []
    if root_kind == EDGE:
        order.append(root)
        seen_e[root] = True
        starts = list(g.edges[root])
    else:
        starts = [root]
    for s in starts:
        seen_v[s] = True
    queue = deque(starts)
    while queue:
        x = queue.popleft()
        for e in g.incident(x):
            if seen_e[e]:
                continue
            seen_e[e] = True
            order.append(e)
            y = g.other_end(e, x)
            if not seen_v[y]:
                seen_v[y] = True
                queue.append(y)
    return order


def bfs_vertex_order(g: Multigraph, root: int = 0, root_kind: str = VERTEX) -> list[int]:
    if not is_tree(g):
        raise ValueError("bfs_vertex_order needs a tree")
    starts = list(g.edges[root]) if root_kind == EDGE else [root]
    seen = [False] * g.n
    for s in starts:
        seen[s] = True
    order = list(starts)
    head = 0
    while head < len(order):
        x = order[head]
        head += 1
        for e in g.incident(x):
            y = g.other_end(e, x)
            if not seen[y]:
                seen[y] = True
                order.append(y)
    return order


def tree_distance_edge_colour(g: Multigraph, t: int) -> Colouring:
    """Greedy in BFS order from vertex 0 (odd t) or edge 0 (even t)."""
    if not is_tree(g):
        raise ValueError("tree_distance_edge_colour needs a tree")
    if g.m == 0:
        return Colouring(EDGE, t, ())
    order = bfs_edge_order(g, 0, VERTEX if t % 2 else EDGE)
    return Colouring(EDGE, t, tuple(greedy_colour(power(line_graph(g), t), order)))


def tree_distance_vertex_colour(g: Multigraph, t: int) -> Colouring:
    """Greedy in BFS order from vertex 0 (even t) or edge 0 (odd t)."""
    if not is_tree(g):
        raise ValueError("tree_distance_vertex_colour needs a tree")
    root_kind = EDGE if t % 2 and g.m else VERTEX
    order = bfs_vertex_order(g, 0, root_kind)
    return Colouring(VERTEX, t, tuple(greedy_colour(power(underlying_simple(g), t), order)))


def verify_distance_colouring(
    g: AnyGraph, t: int, colouring: Colouring
) -> tuple[bool, Optional[tuple[int, int]]]:
    """Check that no two entities within distance ``t`` share a colour.

    Returns ``(True, None)`` or ``(False, (x, y))`` for the lexicographically
    first clashing pair.
    """
    g = as_multigraph(g)
    count = g.m if colouring.kind == EDGE else g.n
    cols = colouring.colours
    if len(cols) != count or any(c is None or c < 1 for c in cols):
        raise ValueError(f"colouring must assign a positive colour to all {count} {colouring.kind}s")
    for x in range(count):
        dist = bfs_distances(g, x, colouring.kind)
        for y in range(x + 1, count):
            if dist[y] <= t and cols[x] == cols[y]:
                return False, (x, y)
    return True, None


class _BudgetExhausted(Exception):
    pass


def _greedy_clique(adj: list[list[int]], masks: list[int]) -> list[int]:
    n = len(adj)
    by_degree = sorted(range(n), key=lambda v: (-len(adj[v]), v))
    best: list[int] = []
    for seed in by_degree:
        if len(adj[seed]) + 1 <= len(best):
            break
        clique = [seed]
        cand = masks[seed]
        while cand:
            pick = -1
            for w in by_degree:
                if cand >> w & 1:
                    pick = w
                    break
            clique.append(pick)
            cand &= masks[pick]
        if len(clique) > len(best):
            best = clique
    return best


def _dsatur_greedy(adj: list[list[int]]) -> list[int]:
    n = len(adj)
    colour = [0] * n
    nbr_cols: list[set[int]] = [set() for _ in range(n)]
    uncoloured = set(range(n))
    while uncoloured:
        v = max(uncoloured, key=lambda x: (len(nbr_cols[x]), len(adj[x]), -x))
        c = 1
        while c in nbr_cols[v]:
            c += 1
        colour[v] = c
        uncoloured.discard(v)
        for w in adj[v]:
            nbr_cols[w].add(c)
    return colour


class _KColourSearch:
    """DSATUR backtracking for a k-colouring with a pre-coloured clique."""

    def __init__(self, adj: list[list[int]], k: int, clique: list[int], budget: int, nodes: int):
        self.adj = adj
        self.k = k
        self.budget = budget
        self.nodes = nodes
        n = len(adj)
        self.colour = [0] * n
        self.count = [[0] * (k + 1) for _ in range(n)]
        self.sat = [0] * n
        self.uncoloured = set(range(n))
        for i, v in enumerate(clique, start=1):
            self._assign(v, i)
        self.used = len(clique)

    def _assign(self, v: int, c: int) -> None:
        self.colour[v] = c
        self.uncoloured.discard(v)
        for w in self.adj[v]:
            row = self.count[w]
            row[c] += 1
            if row[c] == 1:
                self.sat[w] += 1

    def _unassign(self, v: int, c: int) -> None:
        self.colour[v] = 0
        self.uncoloured.add(v)
        for w in self.adj[v]:
            row = self.count[w]
            row[c] -= 1
            if row[c] == 0:
                self.sat[w] -= 1

    def _select(self) -> int:
        sat, adj = self.sat, self.adj
        best, key = -1, None
        for v in self.uncoloured:
            kv = (sat[v], len(adj[v]), -v)
            if key is None or kv > key:
                best, key = v, kv
        return best

    def run(self) -> Optional[list[int]]:
        if self._search():
            return list(self.colour)
        return None

    def _search(self) -> bool:
        if not self.uncoloured:
            return True
        self.nodes += 1
        if self.nodes > self.budget:
            raise _BudgetExhausted
        v = self._select()
        if self.sat[v] >= self.k:
            return False
        row = self.count[v]
        used = self.used
        for c in range(1, min(used + 1, self.k) + 1):
            if row[c]:
                continue
            self._assign(v, c)
            if c > used:
                self.used = c
            if self._search():
                return True
            self._unassign(v, c)
            self.used = used
        return False


def exact_chromatic_number(g: SimpleGraph, budget: int = DEFAULT_BUDGET) -> SolveReport:
    """Chromatic number by DSATUR search between a greedy clique and a DSATUR colouring.

    Palettes from the clique size upward are tried in turn, each either
    refuted (raising the lower bound) or realised (closing the gap). When the
    node budget runs out the report carries ``status="bounds-only"``.
    """
    adj = [sorted(g.adj[v]) for v in range(g.n)]
    if g.n == 0:
        return SolveReport("exact", 0, 0, 0, (), (), 0)
    masks = [sum(1 << w for w in a) for a in adj]
    clique = _greedy_clique(adj, masks)
    best = _dsatur_greedy(adj)
    lower, upper = len(clique), max(best)
    nodes = 0
    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, g.n + 200))
    try:
        k = lower
        while k < upper:
            search = _KColourSearch(adj, k, clique, budget, nodes)
            try:
                found = search.run()
            except _BudgetExhausted:
                nodes = budget
                return SolveReport("bounds-only", None, lower, upper, tuple(clique), tuple(best), nodes)
            nodes = search.nodes
            if found is None:
                lower = k + 1
                k += 1
            else:
                best, upper = found, k
    finally:
        sys.setrecursionlimit(limit)
    return SolveReport("exact", upper, upper, upper, tuple(clique), tuple(best), nodes)


def distance_chromatic_index(g: AnyGraph, t: int, budget: int = DEFAULT_BUDGET) -> SolveReport:
    return exact_chromatic_number(power(line_graph(g), t), budget)


def distance_chromatic_number(g: AnyGraph, t: int, budget: int = DEFAULT_BUDGET) -> SolveReport:
    return exact_chromatic_number(power(underlying_simple(g), t), budget)


def proper_edge_colour_greedy(g: Multigraph) -> list[int]:
    """Proper edge colouring in edge-id order; at most 2*maxdeg - 1 colours."""
    at_vertex: list[set[int]] = [set() for _ in range(g.n)]
    out = []
    for u, v in g.edges:
        c = 1
        while c in at_vertex[u] or c in at_vertex[v]:
            c += 1
        at_vertex[u].add(c)
        at_vertex[v].add(c)
        out.append(c)
    return out


def contraction_pipeline_edge_colour(g: AnyGraph, t: int) -> Colouring:
    """Distance-t edge colouring via one contraction per proper colour class.

    Each class is contracted, the contracted graph is distance-(t-1)
    vertex-coloured greedily in degeneracy order, and the classes are lifted
    back with disjoint palettes.
    """
    if t < 2:
        raise ValueError(f"the contraction pipeline needs t >= 2, got {t}")
    g = as_multigraph(g)
    classes: dict[int, list[int]] = {}
    for e, c in enumerate(proper_edge_colour_greedy(g)):
        classes.setdefault(c, []).append(e)
    out = [0] * g.m
    offset = 0
    for c in sorted(classes):
        members = classes[c]
        vertex_of = contraction_classes(g, members)
        h = power(contract_edges(g, members), t - 1)
        order, _ = degeneracy_order(h)
        vcol = greedy_colour(h, order)
        local = sorted({vcol[vertex_of[g.edges[e][0]]] for e in members})
        rank = {col: i for i, col in enumerate(local, start=1)}
        for e in members:
            out[e] = offset + rank[vcol[vertex_of[g.edges[e][0]]]]
        offset += len(local)
    return Colouring(EDGE, t, tuple(out))


@dataclass(frozen=True)
class EdgeBoundVerdict:
    edges: int
    max_degree: int
    bound: Fraction
    matching_number: int
    tutte_berge: int
    holds: bool = field(init=False)

    def __post_init__(self) -> None:
        ok = self.edges <= self.bound and self.matching_number <= 4
        ok = ok and self.matching_number == self.tutte_berge
        object.__setattr__(self, "holds", ok)


def check_L2_clique_edge_bound(g: AnyGraph) -> EdgeBoundVerdict:
    """For a multigraph whose line graph squared is complete, check |E| <= 9d/2
    and that the underlying simple graph has matching number at most 4."""
    g = as_multigraph(g)
    if not is_clique(power(line_graph(g), 2)):
        raise ValueError("the square of the line graph is not complete")
    simple = underlying_simple(g)
    d = max_degree(g)
    return EdgeBoundVerdict(
        edges=g.m,
        max_degree=d,
        bound=Fraction(9 * d, 2),
        matching_number=max_matching_bruteforce(simple),
        tutte_berge=tutte_berge_min(simple),
    )

"""Multigraph and simple-graph structures plus the distance machinery built on them.

Vertices are ``0..n-1``. A :class:`Multigraph` keeps every edge as a distinct id
(its index in ``edges``), so parallel edges stay individually addressable; a
:class:`SimpleGraph` is an adjacency-set graph used for line graphs, powers and
as colouring-solver input.
"""

from __future__ import annotations

import heapq
import math
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence, Union

INFINITY = math.inf
"""Distance/girth sentinel for unreachable entities and acyclic graphs."""

VERTEX = "vertex"
EDGE = "edge"


class SizeGuardError(ValueError):
    """Raised when an exhaustive routine is asked to run past its size guard."""


class Multigraph:
    """Loopless multigraph; edge ``i`` is ``edges[i] == (u, v)``."""

    __slots__ = ("n", "edges", "_incidence")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        self.n = int(n)
        self.edges: tuple[tuple[int, int], ...] = tuple((int(u), int(v)) for u, v in edges)
        incidence: list[list[int]] = [[] for _ in range(self.n)]
        for e, (u, v) in enumerate(self.edges):
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {e} = ({u}, {v}) has an endpoint outside 0..{self.n - 1}")
            if u == v:
                raise ValueError(f"edge {e} is a loop at vertex {u}")
            incidence[u].append(e)
            incidence[v].append(e)
        self._incidence = tuple(tuple(ids) for ids in incidence)

    @property
    def m(self) -> int:
        return len(self.edges)

    def incident(self, v: int) -> tuple[int, ...]:
        """Edge ids at ``v`` in increasing order."""
        return self._incidence[v]

    def degree(self, v: int) -> int:
        return len(self._incidence[v])

    def other_end(self, e: int, v: int) -> int:
        u, w = self.edges[e]
        return w if u == v else u

    def neighbours(self, v: int) -> set[int]:
        return {self.other_end(e, v) for e in self._incidence[v]}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Multigraph(n={self.n}, m={self.m})"


class SimpleGraph:
    """Undirected simple graph stored as one frozenset of neighbours per vertex."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: Sequence[Iterable[int]]):
        if len(adj) != n:
            raise ValueError(f"expected {n} adjacency sets, got {len(adj)}")
        self.n = n
        self.adj: tuple[frozenset[int], ...] = tuple(frozenset(a) for a in adj)
        for v, nbrs in enumerate(self.adj):
            if v in nbrs:
                raise ValueError(f"loop at vertex {v}")
            for w in nbrs:
                if not 0 <= w < n or v not in self.adj[w]:
                    raise ValueError(f"adjacency {v}-{w} is not symmetric")

    @classmethod
    def from_edges(cls, n: int, pairs: Iterable[Sequence[int]]) -> SimpleGraph:
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in pairs:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, adj)

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbours(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def edge_list(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"SimpleGraph(n={self.n}, m={self.m})"


AnyGraph = Union[Multigraph, SimpleGraph]


@dataclass(frozen=True)
class DistanceClass:
    """Entities within ``radius`` of ``centre``, centre excluded."""

    kind: str
    centre: int
    radius: int
    members: frozenset[int]


def as_multigraph(g: AnyGraph) -> Multigraph:
    if isinstance(g, Multigraph):
        return g
    return Multigraph(g.n, g.edge_list())


def underlying_simple(g: AnyGraph) -> SimpleGraph:
    if isinstance(g, SimpleGraph):
        return g
    return SimpleGraph.from_edges(g.n, g.edges)


def line_graph(g: AnyGraph) -> SimpleGraph:
    """One vertex per edge id; parallel edges end up adjacent."""
    g = as_multigraph(g)
    adj: list[set[int]] = [set() for _ in range(g.m)]
    for v in range(g.n):
        for e, f in combinations(g.incident(v), 2):
            adj[e].add(f)
            adj[f].add(e)
    return SimpleGraph(g.m, adj)


def _bfs(neighbours, count: int, source: int, limit: float = INFINITY) -> list[float]:
    dist: list[float] = [INFINITY] * count
    dist[source] = 0
    queue = deque([source])
    while queue:
        x = queue.popleft()
        dx = dist[x]
        if dx >= limit:
            continue
        for y in neighbours(x):
            if dist[y] == INFINITY:
                dist[y] = dx + 1
                queue.append(y)
    return dist


def _edge_neighbours(g: Multigraph):
    def nbrs(e: int):
        u, v = g.edges[e]
        for f in g.incident(u):
            if f != e:
                yield f
        for f in g.incident(v):
            if f != e:
                yield f

    return nbrs


def _vertex_neighbours(g: AnyGraph):
    if isinstance(g, SimpleGraph):
        return g.adj.__getitem__
    return g.neighbours


def bfs_distances(g: AnyGraph, source: int, kind: str = VERTEX) -> list[float]:
    """Distances from ``source``; edge kind measures distance in the line graph."""
    if kind == EDGE:
        g = as_multigraph(g)
        if not 0 <= source < g.m:
            raise IndexError(f"edge id {source} out of range 0..{g.m - 1}")
        return _bfs(_edge_neighbours(g), g.m, source)
    if kind != VERTEX:
        raise ValueError(f"unknown entity kind {kind!r}")
    if not 0 <= source < g.n:
        raise IndexError(f"vertex id {source} out of range 0..{g.n - 1}")
    return _bfs(_vertex_neighbours(g), g.n, source)


def neighbourhood(g: AnyGraph, centre: int, radius: int, kind: str = VERTEX) -> DistanceClass:
    if radius < 0:
        raise ValueError("radius must be non-negative")
    dist = bfs_distances(g, centre, kind)
    members = frozenset(x for x, dx in enumerate(dist) if 0 < dx <= radius)
    return DistanceClass(kind, centre, radius, members)


def power(g: SimpleGraph, t: int) -> SimpleGraph:
    """Vertices adjacent iff at distance at most ``t`` in ``g``."""
    if t < 1:
        raise ValueError(f"power exponent must be >= 1, got {t}")
    if t == 1:
        return g
    adj = []
    for v in range(g.n):
        dist = _bfs(g.adj.__getitem__, g.n, v, limit=t)
        adj.append({w for w, dw in enumerate(dist) if 0 < dw <= t})
    return SimpleGraph(g.n, adj)


def girth(g: AnyGraph) -> float:
    """Shortest cycle length; a parallel pair is a 2-cycle, forests give INFINITY."""
    g = as_multigraph(g)
    seen: set[tuple[int, int]] = set()
    for u, v in g.edges:
        key = (u, v) if u < v else (v, u)
        if key in seen:
            return 2
        seen.add(key)
    best = INFINITY
    for root in range(g.n):
        dist = [-1] * g.n
        parent_edge = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            # no shorter cycle can be closed through vertices this deep
            if 2 * dist[x] >= best:
                break
            for e in g.incident(x):
                if e == parent_edge[x]:
                    continue
                y = g.other_end(e, x)
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    parent_edge[y] = e
                    queue.append(y)
                else:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


def max_degree(g: AnyGraph) -> int:
    return max((g.degree(v) for v in range(g.n)), default=0)


def connected_components(g: AnyGraph) -> list[list[int]]:
    nbrs = _vertex_neighbours(g)
    comp = [-1] * g.n
    parts: list[list[int]] = []
    for s in range(g.n):
        if comp[s] >= 0:
            continue
        comp[s] = len(parts)
        part = [s]
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in nbrs(x):
                if comp[y] < 0:
                    comp[y] = len(parts)
                    part.append(y)
                    queue.append(y)
        parts.append(sorted(part))
    return parts


def is_tree(g: AnyGraph) -> bool:
    if g.n == 0:
        return False
    return g.m == g.n - 1 and len(connected_components(g)) == 1


def is_clique(g: SimpleGraph) -> bool:
    return all(len(g.adj[v]) == g.n - 1 for v in range(g.n))


def contraction_classes(g: Multigraph, edge_ids: Iterable[int]) -> list[int]:
    """Map each vertex to its class after contracting ``edge_ids``.

    Classes are numbered in order of their smallest vertex.
    """
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in edge_ids:
        if not 0 <= e < g.m:
            raise IndexError(f"edge id {e} out of range 0..{g.m - 1}")
        a, b = (find(x) for x in g.edges[e])
        if a != b:
            parent[max(a, b)] = min(a, b)
    label: dict[int, int] = {}
    out = []
    for v in range(g.n):
        r = find(v)
        if r not in label:
            label[r] = len(label)
        out.append(label[r])
    return out


def contract_edges(g: Multigraph, edge_ids: Iterable[int]) -> SimpleGraph:
    """Contract the given edges, then drop loops and parallel edges."""
    cls = contraction_classes(g, edge_ids)
    size = max(cls, default=-1) + 1
    adj: list[set[int]] = [set() for _ in range(size)]
    for u, v in g.edges:
        a, b = cls[u], cls[v]
        if a != b:
            adj[a].add(b)
            adj[b].add(a)
    return SimpleGraph(size, adj)


def degeneracy_order(g: SimpleGraph) -> tuple[list[int], int]:
    """Smallest-last ordering and the degeneracy.

    A minimum-degree vertex (lowest id on ties) is removed repeatedly; the
    returned ordering is the removal order reversed.
    """
    deg = [g.degree(v) for v in range(g.n)]
    heap = [(deg[v], v) for v in range(g.n)]
    heapq.heapify(heap)
    removed = [False] * g.n
    removal: list[int] = []
    degeneracy = 0
    while heap:
        dv, v = heapq.heappop(heap)
        if removed[v] or dv != deg[v]:
            continue
        removed[v] = True
        removal.append(v)
        degeneracy = max(degeneracy, dv)
        for w in g.adj[v]:
            if not removed[w]:
                deg[w] -= 1
                heapq.heappush(heap, (deg[w], w))
    removal.reverse()
    return removal, degeneracy


def _check_guard(g: SimpleGraph, max_edges: int, max_vertices: int) -> None:
    if g.m > max_edges and g.n > max_vertices:
        raise SizeGuardError(
            f"graph with n={g.n}, m={g.m} exceeds the exhaustive-search guard "
            f"(m <= {max_edges} or n <= {max_vertices})"
        )


def max_matching_bruteforce(
    g: AnyGraph, max_edges: int = 24, max_vertices: int = 14
) -> int:
    """Maximum matching size by exhaustive search over vertex subsets."""
    g = underlying_simple(g)
    _check_guard(g, max_edges, max_vertices)
    nbr_mask = [sum(1 << w for w in g.adj[v]) for v in range(g.n)]

    @lru_cache(maxsize=None)
    def best(mask: int) -> int:
        if not mask:
            return 0
        v = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << v)
        result = best(rest)
        cand = nbr_mask[v] & rest
        while cand:
            low = cand & -cand
            cand ^= low
            result = max(result, 1 + best(rest & ~low))
        return result

    return best((1 << g.n) - 1)


def odd_components(g: SimpleGraph, removed_mask: int = 0) -> int:
    """Number of odd-order components of ``g`` minus the vertices in ``removed_mask``."""
    nbr_mask = [sum(1 << w for w in g.adj[v]) for v in range(g.n)]
    return _odd_components(nbr_mask, ((1 << g.n) - 1) & ~removed_mask)


def _odd_components(nbr_mask: list[int], alive: int) -> int:
    odd = 0
    while alive:
        frontier = alive & -alive
        comp = frontier
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            new = nbr_mask[low.bit_length() - 1] & alive & ~comp
            comp |= new
            frontier |= new
        alive &= ~comp
        odd += bin(comp).count("1") & 1
    return odd


def tutte_berge_min(g: AnyGraph, max_vertices: int = 20) -> int:
    """Evaluate ``(1/2) min_U (|U| - odd(G - U) + |V|)`` over every vertex subset U."""
    g = underlying_simple(g)
    if g.n > max_vertices:
        raise SizeGuardError(f"n={g.n} exceeds subset-enumeration guard {max_vertices}")
    nbr_mask = [sum(1 << w for w in g.adj[v]) for v in range(g.n)]
    full = (1 << g.n) - 1
    best = None
    for u_mask in range(1 << g.n):
        val = bin(u_mask).count("1") - _odd_components(nbr_mask, full & ~u_mask) + g.n
        if best is None or val < best:
            best = val
    assert best is not None and best % 2 == 0
    return best // 2

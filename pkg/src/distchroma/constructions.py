"""Generators for the explicit tree, planar multigraph and odd-cycle families.

Vertex numbering is deterministic: base graph first, then subdivision vertices
in edge-id order, then attached tree vertices in BFS order, one copy at a time.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Optional

from .bounds import FAMILIES, construction_counts, odd_cycle_length, tau_edge, tau_vertex
from .graphs import EDGE, INFINITY, VERTEX, Multigraph


@dataclass(frozen=True)
class Claim:
    """A machine-checkable statement about a generated graph.

    ``name`` is one of ``vertices``, ``edges``, ``max_degree``, ``girth``,
    ``is_tree``, ``power_clique`` (the ``radius``-th power of the graph or its
    line graph is complete) or ``chromatic_exceeds`` (the distance-``radius``
    chromatic number/index is larger than ``expected``).
    """

    name: str
    expected: object = None
    kind: Optional[str] = None
    radius: Optional[int] = None
    members: Optional[tuple[int, ...]] = None

    def label(self) -> str:
        if self.name == "power_clique":
            base = "L(G)" if self.kind == EDGE else "G"
            on = f" on {len(self.members)} vertices" if self.members is not None else ""
            return f"{base}^{self.radius} is a clique{on}"
        if self.name == "chromatic_exceeds":
            sym = "chi'" if self.kind == EDGE else "chi"
            return f"{sym}_{self.radius} > {self.expected}"
        return f"{self.name} == {self.expected}"


@dataclass(frozen=True)
class ConstructionDescriptor:
    family: str
    params: dict
    predicted_vertices: int
    predicted_edges: int
    claims: tuple[Claim, ...] = field(default=())

    def to_dict(self) -> dict:
        out = asdict(self)
        out["claims"] = [
            {k: (None if v == INFINITY else v) for k, v in asdict(c).items()} for c in self.claims
        ]
        return out

    @classmethod
    def from_dict(cls, data: dict) -> ConstructionDescriptor:
        claims = []
        for c in data.get("claims", []):
            c = dict(c)
            if c["name"] == "girth" and c.get("expected") is None:
                c["expected"] = INFINITY
            if c.get("members") is not None:
                c["members"] = tuple(c["members"])
            claims.append(Claim(**c))
        return cls(
            data["family"],
            dict(data["params"]),
            data["predicted_vertices"],
            data["predicted_edges"],
            tuple(claims),
        )


class _Builder:
    def __init__(self, n: int = 0, d: int = 3):
        self.n = n
        self.d = d
        self.edges: list[tuple[int, int]] = []

    def vertex(self) -> int:
        self.n += 1
        return self.n - 1

    def edge(self, u: int, v: int) -> None:
        self.edges.append((u, v))

    def attach_tree(self, root: int, k: int, copies: int = 1) -> None:
        """Root ``copies`` copies of the height-``k`` leaf-rooted tree at ``root``."""
        for _ in range(copies):
            if k < 1:
                continue
            child = self.vertex()
            self.edge(root, child)
            frontier = [(child, k - 1)]
            head = 0
            while head < len(frontier):
                x, h = frontier[head]
                head += 1
                if h < 1:
                    continue
                for _ in range(self.d - 1):
                    y = self.vertex()
                    self.edge(x, y)
                    frontier.append((y, h - 1))

    def build(self) -> Multigraph:
        return Multigraph(self.n, self.edges)


def tree_T(k: int, d: int) -> Multigraph:
    """Internally d-regular tree of height k rooted at vertex 0, a leaf."""
    construction_counts("tree_T", d=d, k=k)
    b = _Builder(1, d)
    b.attach_tree(0, k)
    return b.build()


def extremal_tree_edge(t: int, d: int) -> Multigraph:
    construction_counts("extremal_tree_edge", t=t, d=d)
    if t % 2:
        b = _Builder(1, d)
        b.attach_tree(0, (t + 1) // 2, copies=d)
    else:
        b = _Builder(2, d)
        b.edge(0, 1)
        for end in (0, 1):
            b.attach_tree(end, t // 2, copies=d - 1)
    return b.build()


def extremal_tree_vertex(t: int, d: int) -> Multigraph:
    construction_counts("extremal_tree_vertex", t=t, d=d)
    if t % 2 == 0:
        b = _Builder(1, d)
        b.attach_tree(0, t // 2, copies=d)
    else:
        b = _Builder(2, d)
        b.edge(0, 1)
        for end in (0, 1):
            b.attach_tree(end, (t - 1) // 2, copies=d - 1)
    return b.build()


_TRIANGLE = ((0, 1), (0, 2), (1, 2))


def shannon(d: int) -> Multigraph:
    """Triangle with every side of multiplicity d/2."""
    construction_counts("shannon", d=d)
    return Multigraph(3, [uv for uv in _TRIANGLE for _ in range(d // 2)])


# vertices 0,1,2 form one face triangle, 3,4,5 the opposite one; i and i+3 are antipodal
_OCTA_CROSS = ((0, 4), (0, 5), (1, 3), (1, 5), (2, 3), (2, 4))
_OCTA_FAR = ((3, 4), (3, 5), (4, 5))


def _octahedron_base(d: int) -> tuple[_Builder, list[int]]:
    b = _Builder(6, d)
    for uv in _TRIANGLE:
        for _ in range(d // 2 - 1):
            b.edge(*uv)
    for uv in _OCTA_CROSS + _OCTA_FAR:
        b.edge(*uv)
    pendants = []
    for v in (3, 4, 5):
        for _ in range(d - 4):
            p = b.vertex()
            b.edge(v, p)
            pendants.append(p)
    return b, pendants


def octahedron(d: int) -> Multigraph:
    """Octahedron with one face's sides at multiplicity d/2-1 and d-4 pendants
    at each vertex of the opposite face."""
    construction_counts("octahedron", d=d)
    return _octahedron_base(d)[0].build()


def _subdivide_and_grow(
    base: Multigraph, bundled: set[int], pendants: list[int], k: int, d: int
) -> Multigraph:
    b = _Builder(base.n, d)
    centres = []
    for e, (u, v) in enumerate(base.edges):
        if e in bundled:
            s = b.vertex()
            b.edge(u, s)
            b.edge(s, v)
            centres.append(s)
        else:
            b.edge(u, v)
    for s in centres:
        b.attach_tree(s, k, copies=d - 2)
    for p in pendants:
        b.attach_tree(p, k, copies=d - 1)
    return b.build()


def shannon_hierarchy(k: int, d: int) -> Multigraph:
    construction_counts("shannon_hierarchy", d=d, k=k)
    base = shannon(d)
    return _subdivide_and_grow(base, set(range(base.m)), [], k, d)


def octahedron_hierarchy(k: int, d: int) -> Multigraph:
    construction_counts("octahedron_hierarchy", d=d, k=k)
    b, pendants = _octahedron_base(d)
    base = b.build()
    return _subdivide_and_grow(base, set(range(3 * (d // 2 - 1))), pendants, k, d)


def _cycle_with_trees(length: int, height: int, d: int) -> Multigraph:
    b = _Builder(length, d)
    for i in range(length):
        b.edge(i, (i + 1) % length)
    for i in range(length):
        b.attach_tree(i, height, copies=d - 2)
    return b.build()


def odd_cycle_edge_cert(t: int, d: int) -> Multigraph:
    """Odd cycle of length about tau'/2 with d-2 trees of height t/2 per vertex."""
    construction_counts("odd_cycle_edge_cert", t=t, d=d)
    return _cycle_with_trees(odd_cycle_length(t, d), t // 2, d)


def odd_cycle_vertex_cert(t: int, d: int, ell: int) -> Multigraph:
    construction_counts("odd_cycle_vertex_cert", t=t, d=d, ell=ell)
    return _cycle_with_trees(ell, (t - 1) // 2, d)


def path(n: int) -> Multigraph:
    construction_counts("path", n=n)
    return Multigraph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Multigraph:
    construction_counts("cycle", n=n)
    return Multigraph(n, [(i, (i + 1) % n) for i in range(n)])


GENERATORS = {
    "tree_T": (tree_T, ("k", "d")),
    "extremal_tree_edge": (extremal_tree_edge, ("t", "d")),
    "extremal_tree_vertex": (extremal_tree_vertex, ("t", "d")),
    "shannon": (shannon, ("d",)),
    "octahedron": (octahedron, ("d",)),
    "shannon_hierarchy": (shannon_hierarchy, ("k", "d")),
    "octahedron_hierarchy": (octahedron_hierarchy, ("k", "d")),
    "odd_cycle_edge_cert": (odd_cycle_edge_cert, ("t", "d")),
    "odd_cycle_vertex_cert": (odd_cycle_vertex_cert, ("t", "d", "ell")),
    "path": (path, ("n",)),
    "cycle": (cycle, ("n",)),
}
assert set(GENERATORS) == set(FAMILIES)


def _select(family: str, params: dict) -> dict:
    if family not in GENERATORS:
        raise ValueError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
    names = GENERATORS[family][1]
    missing = [p for p in names if params.get(p) is None]
    if missing:
        raise ValueError(f"family {family} needs parameter(s): {', '.join(missing)}")
    return {p: int(params[p]) for p in names}


def _claims(family: str, p: dict, nv: int, ne: int) -> list[Claim]:
    d = p.get("d")
    out = [Claim("vertices", nv), Claim("edges", ne)]
    if family == "tree_T":
        out += [Claim("is_tree", True), Claim("max_degree", {0: 0, 1: 1}.get(p["k"], d))]
    elif family == "extremal_tree_edge":
        t = p["t"]
        out += [
            Claim("is_tree", True),
            Claim("max_degree", d),
            Claim("power_clique", True, EDGE, t),
        ]
    elif family == "extremal_tree_vertex":
        t = p["t"]
        out += [
            Claim("is_tree", True),
            Claim("max_degree", d if t >= 2 else 1),
            Claim("power_clique", True, VERTEX, t),
        ]
    elif family == "shannon":
        out += [
            Claim("max_degree", d),
            Claim("girth", 2 if d >= 4 else 3),
            Claim("power_clique", True, EDGE, 1),
        ]
    elif family == "octahedron":
        out += [Claim("max_degree", d), Claim("girth", 2), Claim("power_clique", True, EDGE, 2)]
    elif family in ("shannon_hierarchy", "octahedron_hierarchy"):
        k = p["k"]
        shift = 0 if family == "shannon_hierarchy" else 1
        members = None
        if family == "shannon_hierarchy" and k == 0:
            # the three branch vertices sit at distance 3 from the far side's
            # subdivision vertices, so only the subdivision vertices form the clique
            members = tuple(range(3, 3 + 3 * d // 2))
        out += [
            Claim("max_degree", d),
            Claim("girth", 4 if family == "shannon_hierarchy" else 3),
            Claim("power_clique", True, VERTEX, 2 * k + 2 + shift, members),
        ]
        if k >= 1:
            out.append(Claim("power_clique", True, EDGE, 2 * k + 1 + shift))
    elif family == "odd_cycle_edge_cert":
        t = p["t"]
        out += [
            Claim("max_degree", d),
            Claim("girth", odd_cycle_length(t, d)),
            Claim("chromatic_exceeds", tau_edge(t, d), EDGE, t),
        ]
    elif family == "odd_cycle_vertex_cert":
        t = p["t"]
        out += [
            # height-0 trees add nothing, leaving a bare cycle when t == 1
            Claim("max_degree", d if t >= 3 else 2),
            Claim("girth", p["ell"]),
            Claim("chromatic_exceeds", tau_vertex(t, d), VERTEX, t),
        ]
    elif family == "path":
        out += [Claim("is_tree", True), Claim("girth", INFINITY)]
    elif family == "cycle":
        out += [Claim("girth", p["n"])]
    return out


def describe(family: str, **params) -> ConstructionDescriptor:
    """Descriptor with predicted counts and claims; validates parameters."""
    p = _select(family, params)
    nv, ne = construction_counts(family, **p)
    return ConstructionDescriptor(family, p, nv, ne, tuple(_claims(family, p, nv, ne)))


def build(family: str, **params) -> tuple[Multigraph, ConstructionDescriptor]:
    desc = describe(family, **params)
    gen = GENERATORS[family][0]
    return gen(**desc.params), desc


__all__ = [
    "Claim",
    "ConstructionDescriptor",
    "GENERATORS",
    "FAMILIES",
    "build",
    "describe",
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
]

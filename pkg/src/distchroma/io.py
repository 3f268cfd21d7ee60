"""JSON and DOT serialization.

Graph JSON is ``{"n": int, "edges": [[u, v], ...]}`` with edge id equal to the
list index; generated graphs also carry a ``"descriptor"`` object.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Optional, Union

from .constructions import ConstructionDescriptor
from .graphs import Multigraph


def graph_to_dict(g: Multigraph, descriptor: Optional[ConstructionDescriptor] = None) -> dict:
    out: dict = {"n": g.n, "edges": [list(e) for e in g.edges]}
    if descriptor is not None:
        out["descriptor"] = descriptor.to_dict()
    return out


def graph_from_dict(data: dict) -> tuple[Multigraph, Optional[ConstructionDescriptor]]:
    try:
        n = data["n"]
        edges = data["edges"]
    except (KeyError, TypeError) as exc:
        raise ValueError("graph JSON needs keys 'n' and 'edges'") from exc
    if not isinstance(n, int) or not all(isinstance(e, list) and len(e) == 2 for e in edges):
        raise ValueError("graph JSON: 'n' must be an int and 'edges' a list of [u, v] pairs")
    desc = data.get("descriptor")
    return Multigraph(n, edges), (ConstructionDescriptor.from_dict(desc) if desc else None)


def dumps_graph(g: Multigraph, descriptor: Optional[ConstructionDescriptor] = None) -> str:
    return json.dumps(graph_to_dict(g, descriptor), indent=None, separators=(",", ":")) + "\n"


def load_graph(path: Union[str, Path]) -> tuple[Multigraph, Optional[ConstructionDescriptor]]:
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(f"{path}: invalid JSON ({exc})") from exc
    return graph_from_dict(data)


def to_dot(g: Multigraph, name: str = "G") -> str:
    """DOT text with one statement per edge id, so parallel edges repeat."""
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in range(g.n)]
    lines += [f"  {u} -- {v};" for u, v in g.edges]
    lines.append("}")
    return "\n".join(lines) + "\n"

import itertools
import random

import networkx as nx

from distchroma.graphs import Multigraph, SimpleGraph

# filled by the acceptance tests, printed in the terminal summary
ACCEPTANCE: list[str] = []


def random_multigraph(rng: random.Random, n: int, m: int) -> Multigraph:
    edges = []
    for _ in range(m):
        u, v = rng.sample(range(n), 2)
        edges.append((u, v))
    return Multigraph(n, edges)


def random_simple(rng: random.Random, n: int, p: float) -> SimpleGraph:
    pairs = [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < p]
    return SimpleGraph.from_edges(n, pairs)


def random_tree(rng: random.Random, n: int, max_deg: int) -> Multigraph:
    """Random tree on n vertices whose maximum degree is exactly max_deg."""
    assert n >= max_deg + 1
    deg = [0] * n
    edges = []
    # a star at vertex 0 pins the maximum degree
    for v in range(1, max_deg + 1):
        edges.append((0, v))
        deg[0] += 1
        deg[v] += 1
    for v in range(max_deg + 1, n):
        u = rng.choice([w for w in range(v) if deg[w] < max_deg])
        edges.append((u, v))
        deg[u] += 1
        deg[v] += 1
    perm = list(range(n))
    rng.shuffle(perm)
    edges = [(perm[u], perm[v]) for u, v in edges]
    rng.shuffle(edges)
    return Multigraph(n, edges)


def from_nx(h: nx.Graph) -> SimpleGraph:
    index = {v: i for i, v in enumerate(sorted(h.nodes))}
    return SimpleGraph.from_edges(len(index), [(index[u], index[v]) for u, v in h.edges])

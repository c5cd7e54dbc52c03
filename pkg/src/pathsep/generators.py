"""Deterministic and seeded instance generators."""

from __future__ import annotations

import random
from itertools import combinations

from .graph import Graph, build_graph


def gen_path(k: int) -> Graph:
    """Path on ``k`` vertices."""
    return build_graph(k, [(i, i + 1) for i in range(k - 1)])


def gen_star(k: int) -> Graph:
    """Star K_{1,k}: center 0 and leaves 1..k."""
    return build_graph(k + 1, [(0, i) for i in range(1, k + 1)])


def gen_cycle(k: int) -> Graph:
    if k < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return build_graph(k, [(i, (i + 1) % k) for i in range(k)])


def gen_complete(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2))


def gen_complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with parts 0..a-1 and a..a+b-1."""
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def gen_hypercube(d: int) -> Graph:
    """Q_d; vertex v is the 0/1 vector of the binary expansion of v."""
    n = 1 << d
    return build_graph(n, [(v, v | (1 << i)) for v in range(n) for i in range(d) if not v >> i & 1])


def gen_petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


def gen_spider(legs: int, length: int) -> Graph:
    """Center 0 with ``legs`` disjoint paths of ``length`` edges hanging off it."""
    edges = []
    v = 1
    for _ in range(legs):
        prev = 0
        for _ in range(length):
            edges.append((prev, v))
            prev = v
            v += 1
    return build_graph(v, edges)


def gen_gnp(n: int, p: float, rng_seed: int | None = None) -> Graph:
    """Erdős–Rényi G(n, p), pairs visited in lexicographic order."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability {p} outside [0, 1]")
    rng = random.Random(rng_seed)
    rand = rng.random
    return build_graph(n, [(u, v) for u, v in combinations(range(n), 2) if rand() < p])


def prufer_to_edges(seq: list[int], n: int) -> list[tuple[int, int]]:
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = next(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, w = (v for v in range(n) if degree[v] == 1)
    edges.append((u, w))
    return edges


def gen_random_tree(n: int, rng_seed: int | None = None) -> Graph:
    """Uniform labelled tree from a random Prüfer sequence."""
    if n < 1:
        raise ValueError("a tree needs at least one vertex")
    if n == 1:
        return build_graph(1, [])
    if n == 2:
        return build_graph(2, [(0, 1)])
    rng = random.Random(rng_seed)
    return build_graph(n, prufer_to_edges([rng.randrange(n) for _ in range(n - 2)], n))


def gen_random_forest(n: int, rng_seed: int | None = None, max_parts: int = 4) -> Graph:
    """Disjoint union of random trees with randomly chosen sizes summing to ``n``."""
    rng = random.Random(rng_seed)
    parts = rng.randint(1, max(1, min(max_parts, n)))
    cuts = sorted(rng.sample(range(1, n), parts - 1)) if parts > 1 else []
    sizes = [b - a for a, b in zip([0] + cuts, cuts + [n])]
    edges, base = [], 0
    for k in sizes:
        t = gen_random_tree(k, rng.randrange(2**32))
        edges += [(u + base, v + base) for u, v in t.edges]
        base += k
    return build_graph(n, edges)


def gen_tree_plus_chords(n: int, chords: int, rng_seed: int | None = None) -> Graph:
    """Random tree with ``chords`` extra random non-edges added."""
    rng = random.Random(rng_seed)
    t = gen_random_tree(n, rng.randrange(2**32))
    present = set(t.edges)
    edges = list(t.edges)
    limit = n * (n - 1) // 2
    while chords > 0 and len(edges) < limit:
        u, v = sorted(rng.sample(range(n), 2))
        if (u, v) not in present:
            present.add((u, v))
            edges.append((u, v))
            chords -= 1
    return build_graph(n, edges)


def gen_extremal_tree(n: int) -> Graph:
    """A tree minimising leaves + degree-2 vertices.

    Even n: caterpillar whose spine vertices all have degree 3 and every other
    vertex is a leaf.  Odd n: the even tree on n-1 vertices with one leaf edge
    subdivided, which adds a single vertex of degree 2.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    if n % 2:
        if n == 3:
            return gen_path(3)
        base = gen_extremal_tree(n - 1)
        edges = list(base.edges)
        u, leaf = next((u, v) for u, v in edges if base.degree(v) == 1 or base.degree(u) == 1)
        if base.degree(u) == 1:
            u, leaf = leaf, u
        edges.remove((min(u, leaf), max(u, leaf)))
        w = n - 1
        edges += [(u, w), (w, leaf)]
        return build_graph(n, edges)
    k = n // 2 - 1
    if k == 0:
        return gen_path(2)
    if k == 1:
        return gen_star(3)
    edges = [(i, i + 1) for i in range(k - 1)]
    nxt = k
    for i in range(k):
        want = 2 if i in (0, k - 1) else 1
        for _ in range(want):
            edges.append((i, nxt))
            nxt += 1
    return build_graph(n, edges)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    return build_graph(g1.n + g2.n, list(g1.edges) + [(u + g1.n, v + g1.n) for u, v in g2.edges])


FAMILIES = {
    "path": gen_path,
    "star": gen_star,
    "cycle": gen_cycle,
    "complete": gen_complete,
    "bipartite": gen_complete_bipartite,
    "hypercube": gen_hypercube,
    "petersen": gen_petersen,
    "spider": gen_spider,
    "gnp": gen_gnp,
    "tree": gen_random_tree,
    "forest": gen_random_forest,
    "tree-chords": gen_tree_plus_chords,
    "extremal-tree": gen_extremal_tree,
}

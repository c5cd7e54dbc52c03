"""Structural recognition of the graph families with dedicated constructions."""

from __future__ import annotations

from .graph import Graph


def is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def hypercube_dimension(g: Graph) -> int | None:
    """d if g is Q_d under its binary labelling, else None."""
    n = g.n
    if n < 2 or n & (n - 1):
        return None
    d = n.bit_length() - 1
    if g.m != d * n // 2 or any(k != d for k in g.degrees()):
        return None
    for u, v in g.edges:
        x = u ^ v
        if x & (x - 1):
            return None
    return d


def bipartite_parts(g: Graph) -> tuple[int, int] | None:
    """(a, b) if g is a complete bipartite graph K_{a,b} with a, b >= 1."""
    if g.m == 0 or any(k == 0 for k in g.degrees()):
        return None
    side = [-1] * g.n
    side[0] = 0
    stack = [0]
    while stack:
        v = stack.pop()
        for u in g.neighbors(v):
            if side[u] < 0:
                side[u] = 1 - side[v]
                stack.append(u)
            elif side[u] == side[v]:
                return None
    if min(side) < 0:
        return None
    a = side.count(0)
    b = g.n - a
    if g.m != a * b:
        return None
    return a, b


def detect_method(g: Graph) -> str:
    """forest -> complete (n >= 5) -> hypercube (d >= 2) -> general."""
    if g.is_forest():
        return "forest"
    if is_complete(g) and g.n >= 5:
        return "complete"
    d = hypercube_dimension(g)
    if d is not None and d >= 2:
        return "hypercube"
    return "general"

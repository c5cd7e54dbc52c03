"""Brute-force path separation number for tiny graphs."""

from __future__ import annotations

import math
import os

from .bounds import EPS, entropy_lower_bound
from .graph import Graph, Path, PathFamily, validate_path
from .verify import is_separator

DEFAULT_MAX_EDGES = 14


class InstanceTooLarge(ValueError):
    pass


def max_exact_edges() -> int:
    return int(os.environ.get("PATHSEP_MAX_EXACT_EDGES", DEFAULT_MAX_EDGES))


def _guard(g: Graph, max_edges: int | None) -> None:
    limit = max_exact_edges() if max_edges is None else max_edges
    if g.m > limit:
        raise InstanceTooLarge(f"m={g.m} exceeds the exact-solver limit {limit}")


def enumerate_paths(g: Graph, max_edges: int | None = None) -> list[Path]:
    """All simple paths with at least one edge, each listed once with its
    smaller endpoint first, sorted by (length, vertices)."""
    _guard(g, max_edges)
    out = []
    nbrs = [sorted(g.neighbors(v)) for v in range(g.n)]

    def grow(path: list[int], on: set[int]) -> None:
        if len(path) > 1 and path[0] < path[-1]:
            out.append(tuple(path))
        for u in nbrs[path[-1]]:
            if u not in on:
                path.append(u)
                on.add(u)
                grow(path, on)
                on.discard(u)
                path.pop()

    for s in range(g.n):
        grow([s], {s})
    out.sort(key=lambda p: (len(p), p))
    return [validate_path(g, p) for p in out]


def sperner_min_t(m: int) -> int:
    """Smallest t with C(t, ⌊t/2⌋) >= m (nonempty antichain of m sets in 2^[t])."""
    if m <= 1:
        return m
    t = 1
    while math.comb(t, t // 2) < m:
        t += 1
    return t


def _lower_bound(g: Graph) -> int:
    lb = sperner_min_t(g.m)
    if g.n >= 2 and g.m >= g.n:
        lb = max(lb, math.ceil(entropy_lower_bound(g.n, g.m)[0] - EPS))
    return lb


def _search(m: int, masks: list[int], t: int, comp: list[int] | None = None) -> list[int] | None:
    """Indices of at most t path masks forming a separator, or None.

    Branches on the unseparated pair with the fewest candidate paths; branch
    j excludes candidates 0..j-1, so no family is generated twice.  ``comp``
    gives each edge's connected component; a path lies inside one component,
    so the paths still needed add up over components.
    """
    comp = comp if comp is not None else [0] * m
    full = range(m)
    by_pair: dict[tuple[int, int], list[int]] = {}
    for e in full:
        for f in full:
            if e != f:
                by_pair[(e, f)] = [i for i, x in enumerate(masks) if x >> e & 1 and not x >> f & 1]

    def needed(sig: list[int]) -> int:
        groups: dict[tuple[int, int], int] = {}
        for e in full:
            key = (comp[e], sig[e])
            groups[key] = groups.get(key, 0) + 1
        need: dict[int, int] = {}
        for (c, _), size in groups.items():
            if size > 1:
                need[c] = max(need.get(c, 0), sperner_min_t(size))
        return sum(need.values())

    def rec(chosen: list[int], banned: set[int], sig: list[int], k: int) -> list[int] | None:
        if needed(sig) > k:
            return None
        best = None
        for e in full:
            se = sig[e]
            for f in full:
                if e != f and se & sig[f] == se:
                    cands = [i for i in by_pair[(e, f)] if i not in banned]
                    if not cands or k == 0:
                        return None
                    if best is None or len(cands) < len(best):
                        best = cands
        if best is None:
            return chosen
        bit = 1 << len(chosen)
        banned = set(banned)
        for i in best:
            x = masks[i]
            nsig = [s | bit if x >> e & 1 else s for e, s in enumerate(sig)]
            got = rec(chosen + [i], banned, nsig, k - 1)
            if got is not None:
                return got
            banned.add(i)
        return None

    return rec([], set(), [0] * m, t)


def exact_psn(g: Graph, max_edges: int | None = None) -> tuple[int, PathFamily]:
    """Minimum separator size by iterative deepening over t, with a witness."""
    if g.m == 0:
        return 0, PathFamily(g, [])
    if g.m == 1:
        return 1, PathFamily(g, [g.edges[0]])
    paths = enumerate_paths(g, max_edges)
    uniq: dict[int, Path] = {}
    for p in paths:
        uniq.setdefault(p.mask, p)
    plist = list(uniq.values())
    masks = [p.mask for p in plist]
    comp = [0] * g.m
    for c, vs in enumerate(g.components()):
        for v in vs:
            for _, e in g.adjacency[v]:
                comp[e] = c
    for t in range(_lower_bound(g), g.m + 1):
        got = _search(g.m, masks, t, comp)
        if got is not None:
            fam = PathFamily(g, [plist[i] for i in got])
            assert is_separator(g, fam)
            return len(fam), fam
    raise AssertionError("single edges always separate")

"""Separator for dense random graphs G(n, p).

Edges are split at random into four classes; each of the three pairings of
the classes gives two complementary halves.  Inside one half (the *main*
graph) the edges are split into ``r`` random classes, ``s`` independent
times.  Every class is properly edge-coloured, and each colour class (a
matching) is stitched into a path using edges of the other half as
connectors.  Both halves play the main role in turn.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

from ..coloring import colour_classes, greedy_colouring, misra_gries
from ..graph import Graph, PathFamily
from .result import ConstructionResult, certify

PAIRINGS = (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2)))


def gnp_parameters(n: int, p: float) -> tuple[int, int]:
    """(r, s) = (⌊3pn / ln n⌋, ⌊4 ln n / ln(pn / ln n)⌋), both at least 1."""
    ln = math.log(n)
    r = max(1, math.floor(3 * p * n / ln))
    ratio = p * n / ln
    s = max(1, math.floor(4 * ln / math.log(ratio))) if ratio > math.e else max(1, math.ceil(4 * ln))
    return r, s


def stitch(matching: list[tuple[int, int]], conn: list[set[int]], rng: random.Random,
           rotation_budget: int | None = None) -> list[list[int]]:
    """Paths through every edge of ``matching``, joined by connector edges.

    Works on the matching edges as super-vertices: a path may enter an edge at
    either end and leave at the other, and vertices outside the matching can
    relay between two matching edges.  When the end is stuck, Pósa rotations
    re-route through connector edges only (matching edges are never broken).
    If no extension is possible within the rotation budget the path is closed
    and a new one started.
    """
    partner: dict[int, int] = {}
    for a, b in matching:
        partner[a] = b
        partner[b] = a
    remaining = set(partner)
    budget = rotation_budget if rotation_budget is not None else 4 * len(matching) + 16
    out = []
    while remaining:
        a = min(remaining)
        b = partner[a]
        if rng.random() < 0.5:
            a, b = b, a
        path = [a, b]
        kinds = [True]  # kinds[i]: edge path[i]-path[i+1] is a matching edge
        on = {a, b}
        remaining -= {a, b}
        flipped = False
        rotations = 0
        while remaining:
            end = path[-1]
            cand = conn[end] & remaining
            if cand:
                u = min(cand)
                path += [u, partner[u]]
                kinds += [False, True]
                on.update((u, partner[u]))
                remaining -= {u, partner[u]}
                flipped = False
                continue
            relay = None
            for w in sorted(conn[end] - on):
                hit = conn[w] & remaining
                if hit:
                    relay = (w, min(hit))
                    break
            if relay is not None:
                w, u = relay
                path += [w, u, partner[u]]
                kinds += [False, False, True]
                on.update((w, u, partner[u]))
                remaining -= {u, partner[u]}
                flipped = False
                continue
            if not flipped:
                path.reverse()
                kinds.reverse()
                flipped = True
                continue
            if rotations >= budget:
                break
            pivots = [i for i in range(len(path) - 2) if not kinds[i] and path[i] in conn[end]]
            if not pivots:
                break
            i = rng.choice(pivots)
            path[i + 1:] = path[i + 1:][::-1]
            kinds = kinds[:i] + [False] + kinds[i + 1:][::-1]
            rotations += 1
            flipped = False
        while not kinds[-1]:
            path.pop()
            kinds.pop()
        while not kinds[0]:
            path.pop(0)
            kinds.pop(0)
        out.append(path)
    return out


def separating_codes(matching: list[tuple[int, int]]) -> list[list[tuple[int, int]]]:
    """Binary-code sub-matchings: edge k (1-based) joins sub-matching j iff bit j of k is set."""
    bits = max(1, math.ceil(math.log2(len(matching) + 1)))
    return [[e for k, e in enumerate(matching, 1) if k >> j & 1] for j in range(bits)]


@dataclass
class GnpStats:
    r: int
    s: int
    subgraphs: int = 0
    matchings: int = 0
    stitched_paths: int = 0
    split_matchings: int = 0
    max_colours: int = 0
    per_role: dict = field(default_factory=dict)


def gnp_family(g: Graph, p: float, rng_seed: int = 0, colouring: str = "vizing",
               matching_codes: bool = False) -> tuple[list[list[int]], GnpStats]:
    rng = random.Random(rng_seed)
    n = g.n
    r, s = gnp_parameters(n, p)
    stats = GnpStats(r, s)
    part = [rng.randrange(4) for _ in range(g.m)]
    colour = misra_gries if colouring == "vizing" else greedy_colouring
    paths: list[list[int]] = []
    for role, halves in enumerate(PAIRINGS):
        for side in (0, 1):
            main_cls, conn_cls = set(halves[side]), set(halves[1 - side])
            main = [e for e in range(g.m) if part[e] in main_cls]
            conn: list[set[int]] = [set() for _ in range(n)]
            for e in range(g.m):
                if part[e] in conn_cls:
                    a, b = g.edges[e]
                    conn[a].add(b)
                    conn[b].add(a)
            before = len(paths)
            for _ in range(s):
                classes: list[list[tuple[int, int]]] = [[] for _ in range(r)]
                for e in main:
                    classes[rng.randrange(r)].append(g.edges[e])
                for sub in classes:
                    if not sub:
                        continue
                    stats.subgraphs += 1
                    cols = colour(n, sub)
                    stats.max_colours = max(stats.max_colours, max(cols) + 1)
                    for mt in colour_classes(sub, cols):
                        stats.matchings += 1
                        groups = separating_codes(mt) if matching_codes else [mt]
                        for grp in groups:
                            if not grp:
                                continue
                            got = stitch(grp, conn, rng)
                            stats.split_matchings += len(got) > 1
                            paths += got
            stats.per_role[(role + 1, side + 1)] = len(paths) - before
    stats.stitched_paths = len(paths)
    return paths, stats


def separator_gnp(g: Graph, p: float, rng_seed: int = 0, colouring: str = "vizing",
                  matching_codes: bool = False) -> ConstructionResult:
    """Random-split / colour / stitch separator, verified and patched."""
    if g.m < 1:
        raise ValueError("graph has no edges")
    paths, stats = gnp_family(g, p, rng_seed, colouring, matching_codes)
    fam, patched = certify(g, PathFamily(g, paths))
    # six roles, each within s*p*n/3 paths in the asymptotic count
    claimed = math.floor(2 * stats.s * p * g.n)
    return ConstructionResult(fam, "gnp", claimed, 0, patched, True, rng_seed, stats)

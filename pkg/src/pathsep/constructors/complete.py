from __future__ import annotations

import math
import random
from itertools import permutations, product

from ..cover import walecki_vertex_paths
from ..generators import gen_complete
from ..graph import Graph, PathFamily
from ..verify import unseparated_pairs
from .result import ConstructionResult

RETRY_BUDGET = 64
MAX_REPAIR_PATHS = 2


def permuted_walecki(n: int, rng: random.Random, copies: int = 3) -> list[list[int]]:
    """Walecki paths plus ``copies`` images under uniform random permutations."""
    base = walecki_vertex_paths(n)
    out = [list(p) for p in base]
    for _ in range(copies):
        perm = list(range(n))
        rng.shuffle(perm)
        out += [[perm[v] for v in p] for p in base]
    return out


def _chain(edges: list[tuple[int, int]]) -> list[list[int]] | None:
    """Components of a linear forest as vertex sequences, or None."""
    adj: dict[int, list[int]] = {}
    for a, b in edges:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    if any(len(x) > 2 for x in adj.values()):
        return None
    seen: set[int] = set()
    comps = []
    for v in sorted(adj):
        if v in seen or len(adj[v]) != 1:
            continue
        comp = [v]
        seen.add(v)
        while True:
            nxt = [u for u in adj[comp[-1]] if u not in seen]
            if not nxt:
                break
            comp.append(nxt[0])
            seen.add(nxt[0])
        comps.append(comp)
    if len(seen) != len(adj):
        return None  # a cycle is left over
    return comps


def _link(comps: list[list[int]], forbidden: set[tuple[int, int]]) -> list[int] | None:
    """Join vertex-disjoint paths of K_n end to start, avoiding forbidden connectors."""
    if len(comps) > 6:
        return None
    for order in permutations(range(len(comps))):
        for flips in product((False, True), repeat=len(comps)):
            seq: list[int] = []
            ok = True
            for i, f in zip(order, flips):
                c = comps[i][::-1] if f else comps[i]
                if seq and (min(seq[-1], c[0]), max(seq[-1], c[0])) in forbidden:
                    ok = False
                    break
                seq += c
            if ok:
                return seq
    return None


def repair_paths(g: Graph, pairs: list[tuple[int, int]], limit: int = MAX_REPAIR_PATHS) -> list[list[int]] | None:
    """At most ``limit`` paths of K_n that settle every unseparated ordered pair.

    Edges that need help are split between the repair paths; a path may hold
    e only if it holds no f with (e, f) unseparated, and the edges of each path
    are chained with connector edges that avoid those f.
    """
    if not pairs:
        return []
    blocked: dict[int, set[int]] = {}
    for e, f in pairs:
        blocked.setdefault(e, set()).add(f)
    needy = sorted(blocked)
    if len(needy) > 12:
        return None
    for k in range(1, limit + 1):
        for assign in product(range(k), repeat=len(needy)):
            if k > 1 and len(set(assign)) < k:
                continue
            groups: list[list[int]] = [[] for _ in range(k)]
            for e, a in zip(needy, assign):
                groups[a].append(e)
            built = []
            for grp in groups:
                members = set(grp)
                bad = set().union(*(blocked[e] for e in grp))
                if members & bad:
                    break
                comps = _chain([g.edges[e] for e in grp])
                if comps is None:
                    break
                seq = _link(comps, {g.edges[f] for f in bad})
                if seq is None:
                    break
                built.append(seq)
            else:
                return built
    return None


def separator_complete(n: int, rng_seed: int = 0, g: Graph | None = None,
                       budget: int = RETRY_BUDGET) -> ConstructionResult:
    """Walecki paths and three random relabellings, plus at most two repair paths."""
    if n < 5:
        raise ValueError("the complete-graph construction needs n >= 5")
    g = g if g is not None else gen_complete(n)
    rng = random.Random(rng_seed)
    claimed = 4 * math.ceil(n / 2) + 2
    best = None
    for attempt in range(budget):
        fam = PathFamily(g, permuted_walecki(n, rng))
        pairs = unseparated_pairs(g, fam)
        fix = repair_paths(g, pairs)
        if fix is not None:
            return ConstructionResult(fam + PathFamily(g, fix), "complete", claimed,
                                      attempt, len(fix), True, rng_seed)
        if best is None or len(pairs) < best[1]:
            best = (fam, len(pairs))
    fam = best[0]
    needy = sorted({e for e, _ in unseparated_pairs(g, fam)})
    patch = PathFamily(g, [g.edges[e] for e in needy])
    return ConstructionResult(fam + patch, "complete", claimed, budget, len(patch), False, rng_seed)

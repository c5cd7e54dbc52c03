from __future__ import annotations

from itertools import combinations
from math import comb

from ..cover import hamilton_path_hypercube, hypercube_vertex_cover, zigzag
from ..generators import gen_hypercube
from ..graph import Graph, PathFamily
from .result import ConstructionResult, certify


def _match_endpoints(paths: list[list[int]]) -> list[int]:
    """Pick an endpoint per path so that as many distinct endpoints as possible
    are used (bipartite matching, augmenting paths)."""
    owner: dict[int, int] = {}

    def augment(i: int, seen: set[int]) -> bool:
        for v in (paths[i][-1], paths[i][0]):
            if v in seen:
                continue
            seen.add(v)
            if v not in owner or augment(owner[v], seen):
                owner[v] = i
                return True
        return False

    for i in range(len(paths)):
        augment(i, set())
    chosen = [paths[i][-1] for i in range(len(paths))]
    for v, i in owner.items():
        chosen[i] = v
    return chosen


def _antichain_codes(count: int) -> tuple[int, list[tuple[int, ...]]]:
    """Shortest code length with ``count`` distinct codes of one weight."""
    if count == 0:
        return 0, []
    length = 1
    while comb(length, (length + 1) // 2) < count:
        length += 1
    return length, list(combinations(range(length), (length + 1) // 2))[:count]


def hypercube_groups(d: int) -> dict[str, list[list[int]]]:
    """Vertex paths of the Q_d separator, split by construction group."""
    if d < 2:
        raise ValueError("need d >= 2")
    if d == 2:
        return {"base": [[0, 1], [1, 3], [3, 2], [2, 0]]}
    top = 1 << (d - 1)
    inner = [p for grp in hypercube_groups(d - 1).values() for p in grp]

    # group 1: separator of the lower half joined to its mirror image
    ends = _match_endpoints(inner)
    group1 = []
    for p, x in zip(inner, ends):
        p = p if p[-1] == x else p[::-1]
        group1.append(p + [v | top for v in reversed(p)])

    # group 2: a cover of the lower half and its mirror image
    cover = hypercube_vertex_cover(d - 1) if d > 2 else [[0, 1]]
    group2 = cover + [[v | top for v in p] for p in cover]

    # group 3: crossing edges not already alone on a group-1 path get distinct
    # codes from one weight class; every code bit gives two zigzag paths
    order = hamilton_path_hypercube(d - 1)
    pos = {v: i for i, v in enumerate(order)}
    joined = set(ends)
    rest = [v for v in order if v not in joined]
    length, codes = _antichain_codes(len(rest))
    group3 = []
    for j in range(length):
        cross = {pos[v] for v, code in zip(rest, codes) if j in code}
        group3.append(zigzag(order, cross, top))
        group3.append(zigzag(order, cross, top, start_high=True))
    every = set(range(len(order)))
    group3.append(zigzag(order, every, top))
    group3.append(zigzag(order, every, top, start_high=True))
    return {"group1": group1, "group2": group2, "group3": group3}


def separator_hypercube(d: int, g: Graph | None = None) -> ConstructionResult:
    """Recursive separator of Q_d of size at most 2d(d+1) - 8."""
    g = g if g is not None else gen_hypercube(d)
    paths = [p for grp in hypercube_groups(d).values() for p in grp]
    fam, patched = certify(g, PathFamily(g, paths))
    return ConstructionResult(fam, "hypercube", 2 * d * (d + 1) - 8, 0, patched, True, None)

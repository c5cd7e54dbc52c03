"""Path covers and decompositions used as building blocks by the constructors."""

from __future__ import annotations

import random
from collections import defaultdict

from .graph import Graph, Path, PathFamily


def _euler_trails(g: Graph) -> list[list[int]]:
    """Split E(g) into trails: pair odd vertices by virtual edges, walk an
    Euler circuit per component and cut it at the virtual edges."""
    m = g.m
    adj: list[list[tuple[int, int]]] = [list(a) for a in g.adjacency]
    trails = []
    for comp in g.components():
        odd = [v for v in comp if len(adj[v]) % 2]
        if not any(adj[v] for v in comp):
            continue
        virtual = m
        for a, b in zip(odd[::2], odd[1::2]):
            adj[a].append((b, virtual))
            adj[b].append((a, virtual))
            virtual += 1
        used: set[int] = set()
        ptr = defaultdict(int)
        start = odd[0] if odd else next(v for v in comp if adj[v])
        # Hierholzer, iterative; circuit holds (vertex, edge used to reach it)
        stack = [(start, -1)]
        circuit = []
        while stack:
            v, via = stack[-1]
            lst = adj[v]
            i = ptr[v]
            while i < len(lst) and lst[i][1] in used:
                i += 1
            ptr[v] = i
            if i == len(lst):
                circuit.append(stack.pop())
            else:
                u, eid = lst[i]
                used.add(eid)
                stack.append((u, eid))
        circuit.reverse()
        for v in comp:
            adj[v] = [x for x in adj[v] if x[1] < m]
        if virtual == m:
            trails.append([v for v, _ in circuit])
            continue
        # rotate the closed walk so it starts right after a virtual edge
        k = next(i for i, (_, via) in enumerate(circuit) if via >= m)
        walk = circuit[k:] + circuit[1:k + 1]
        cur = [walk[0][0]]
        for v, via in walk[1:]:
            if via >= m:
                if len(cur) > 1:
                    trails.append(cur)
                cur = [v]
            else:
                cur.append(v)
        if len(cur) > 1:
            trails.append(cur)
    return trails


def _split_trail(trail: list[int]) -> list[list[int]]:
    """Cut a trail into simple paths at the first repeated vertex each time."""
    out = []
    cur = [trail[0]]
    on = {trail[0]}
    for v in trail[1:]:
        if v in on:
            out.append(cur)
            cur = [cur[-1]]
            on = {cur[0]}
        cur.append(v)
        on.add(v)
    if len(cur) > 1:
        out.append(cur)
    return out


def _merge_paths(paths: list[list[int]]) -> list[list[int]]:
    """Greedily glue paths that share an endpoint and nothing else."""
    paths = [list(p) for p in paths]
    changed = True
    while changed:
        changed = False
        ends: dict[int, list[int]] = defaultdict(list)
        for i, p in enumerate(paths):
            ends[p[0]].append(i)
            ends[p[-1]].append(i)
        dead: set[int] = set()
        for v, idx in ends.items():
            idx = [i for i in idx if i not in dead]
            for a_pos in range(len(idx)):
                a = idx[a_pos]
                if a in dead:
                    continue
                for b in idx[a_pos + 1:]:
                    if b in dead or a == b:
                        continue
                    pa, pb = paths[a], paths[b]
                    if pa[0] == v and pa[-1] == v:
                        continue
                    if len(set(pa) & set(pb)) != 1:
                        continue
                    if pa[-1] != v:
                        pa.reverse()
                    if pb[0] != v:
                        pb.reverse()
                    paths[a] = pa + pb[1:]
                    dead.add(b)
                    changed = True
                    break
                if changed:
                    break
            if changed:
                break
        paths = [p for i, p in enumerate(paths) if i not in dead]
    return paths


def euler_path_cover(g: Graph) -> list[list[int]]:
    pieces = []
    for trail in _euler_trails(g):
        pieces += _split_trail(trail)
    return _merge_paths(pieces)


def peel_path_cover(g: Graph, seed: int = 0) -> list[list[int]]:
    """Repeatedly grow a long path in the unused edges and remove it.

    Paths start at an odd-degree vertex when one exists, extend greedily from
    both ends towards low-degree neighbours and use Pósa rotations when stuck.
    """
    rng = random.Random(seed)
    rem = [set(g.neighbors(v)) for v in range(g.n)]
    left = g.m
    odd = {v for v in range(g.n) if len(rem[v]) % 2}
    out = []
    while left:
        if odd:
            start = min(odd, key=lambda v: (-len(rem[v]), v))
        else:
            start = max((v for v in range(g.n) if rem[v]), key=lambda v: (len(rem[v]), -v))
        path = [start]
        on = {start}
        flipped = False
        rotations = 0
        budget = 2 * len(rem[start]) + 8
        while True:
            end = path[-1]
            free = rem[end] - on
            if free:
                nxt = min(free, key=lambda u: (len(rem[u]), u))
                path.append(nxt)
                on.add(nxt)
                flipped = False
                continue
            if not flipped and len(path) > 1:
                path.reverse()
                flipped = True
                continue
            if rotations >= budget or len(path) < 3:
                break
            pivots = [i for i in range(len(path) - 2) if path[i] in rem[end]]
            good = [i for i in pivots if rem[path[i + 1]] - on]
            if not good:
                break
            i = rng.choice(good)
            path[i + 1:] = path[i + 1:][::-1]
            rotations += 1
            flipped = False
        for a, b in zip(path, path[1:]):
            rem[a].discard(b)
            rem[b].discard(a)
            odd ^= {a, b}
            left -= 1
        out.append(path)
    return _merge_paths(out)


def path_cover(g: Graph, seed: int = 0) -> PathFamily:
    """Edge-disjoint paths covering E(g); the smaller of two heuristics."""
    if g.m == 0:
        return PathFamily(g, [])
    a = euler_path_cover(g)
    b = peel_path_cover(g, seed)
    best = a if len(a) <= len(b) else b
    return PathFamily(g, best)


def walecki_vertex_paths(n: int) -> list[list[int]]:
    if n < 2:
        raise ValueError("walecki_paths needs n >= 2")
    if n % 2 == 0:
        k = n // 2
        paths = []
        for j in range(k):
            p = [j]
            for i in range(1, k):
                p += [(j + i) % n, (j - i) % n]
            p.append((j + k) % n)
            paths.append(p)
        return paths
    # odd: K_{n-1} zigzags closed into Hamilton cycles through the extra vertex
    # n-1; cycle j loses edge {j, j+1}, and those removed edges form 0,1,..,k
    k = (n - 1) // 2
    inf = n - 1
    base = walecki_vertex_paths(n - 1)
    paths = []
    for j, zig in enumerate(base):
        assert zig[0] == j and zig[1] == (j + 1) % (n - 1)
        paths.append(zig[1:] + [inf, zig[0]])
    paths.append(list(range(k + 1)))
    return paths


def walecki_paths(n: int, g: Graph | None = None) -> PathFamily:
    """⌈n/2⌉ edge-disjoint paths covering E(K_n)."""
    from .generators import gen_complete

    return PathFamily(g if g is not None else gen_complete(n), walecki_vertex_paths(n))


def hamilton_path_hypercube(d: int) -> list[int]:
    """Reflected binary Gray code order of Q_d."""
    if d < 1:
        raise ValueError("dimension must be >= 1")
    return [i ^ (i >> 1) for i in range(1 << d)]


def zigzag(order: list[int], cross_at, top: int, start_high: bool = False) -> list[int]:
    """Walk ``order`` in one half of a cube, switching halves (bit ``top``)
    right after every position listed in ``cross_at``."""
    side = top if start_high else 0
    out = []
    for idx, v in enumerate(order):
        out.append(v | side)
        if idx in cross_at:
            side ^= top
            out.append(v | side)
    return out


def hypercube_vertex_cover(d: int) -> list[list[int]]:
    if d < 1:
        raise ValueError("dimension must be >= 1")
    if d == 1:
        return [[0, 1]]
    top = 1 << (d - 1)
    out = []
    for p in hypercube_vertex_cover(d - 1):
        out.append(p + [v | top for v in reversed(p)])
    h = hamilton_path_hypercube(d - 1)
    out.append(zigzag(h, set(range(len(h))), top))
    return out


def hypercube_cover(d: int, g: Graph | None = None) -> PathFamily:
    """d paths covering E(Q_d).

    Each path of the (d-1)-cover is joined to its mirror image through the
    crossing edge at its last vertex, and one zigzag path takes every
    crossing edge.  The paths overlap on interior edges.
    """
    from .generators import gen_hypercube

    return PathFamily(g if g is not None else gen_hypercube(d), hypercube_vertex_cover(d))


def cut_paths(fam: PathFamily, max_len: int) -> PathFamily:
    """Cut every path into consecutive pieces of at most ``max_len`` edges."""
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    out: list[Path] = []
    for p in fam.paths:
        if len(p) <= max_len:
            out.append(p)
            continue
        for k in range(0, len(p), max_len):
            out.append(Path(p.vertices[k:k + max_len + 1], p.edges[k:k + max_len]))
    return PathFamily(fam.graph, out)

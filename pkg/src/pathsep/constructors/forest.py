from __future__ import annotations

from ..bounds import forest_psn
from ..graph import Graph, PathFamily
from .result import ConstructionResult


def _tree_path(parent: dict[int, int], depth: dict[int, int], a: int, b: int) -> list[int]:
    left, right = [a], [b]
    while depth[a] > depth[b]:
        a = parent[a]
        left.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        right.append(b)
    while a != b:
        a, b = parent[a], parent[b]
        left.append(a)
        right.append(b)
    right.pop()
    return left + right[::-1]


def face_paths(g: Graph, comp: list[int]) -> list[list[int]]:
    """Leaf-to-leaf paths along the faces of the tree plus a vertex joined to
    every leaf, using the rotation system given by adjacency order."""
    root = next(v for v in comp if g.degree(v) > 1)
    parent = {root: root}
    depth = {root: 0}
    leaves = []
    stack = [(root, iter(g.neighbors(root)))]
    while stack:
        v, it = stack[-1]
        for u in it:
            if u not in parent:
                parent[u] = v
                depth[u] = depth[v] + 1
                if g.degree(u) == 1:
                    leaves.append(u)
                stack.append((u, iter(g.neighbors(u))))
                break
        else:
            stack.pop()
    k = len(leaves)
    return [_tree_path(parent, depth, leaves[i], leaves[(i + 1) % k]) for i in range(k)]


def split_at_degree_two(g: Graph, paths: list[list[int]], vertices: list[int]) -> list[list[int]]:
    """For each degree-2 vertex, cut one path passing through it at that vertex."""
    paths = [list(p) for p in paths]
    for w in vertices:
        if g.degree(w) != 2:
            continue
        for i, p in enumerate(paths):
            if w in p[1:-1]:
                k = p.index(w)
                paths[i] = p[:k + 1]
                paths.append(p[k:])
                break
        else:
            raise AssertionError(f"no face path runs through degree-2 vertex {w}")
    return paths


def separator_forest(f: Graph) -> ConstructionResult:
    """Optimal separator of a forest, of size v1 + v2 - p."""
    if not f.is_forest():
        raise ValueError("graph is not a forest")
    out: list[list[int]] = []
    for comp in f.components():
        if len(comp) < 2:
            continue
        if all(f.degree(v) <= 2 for v in comp):
            # a path-component is separated by its own edges
            out += [list(f.edges[e]) for v in comp for _, e in f.adjacency[v] if f.edges[e][0] == v]
            continue
        out += split_at_degree_two(f, face_paths(f, comp), comp)
    fam = PathFamily(f, out)
    return ConstructionResult(fam, "forest", forest_psn(f))

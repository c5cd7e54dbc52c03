from __future__ import annotations

import math

from ..bounds import upper_general
from ..cover import cut_paths, path_cover
from ..graph import Graph, PathFamily, build_graph
from .result import ConstructionResult, certify


def _cover_subgraph(g: Graph, eids: list[int], seed: int) -> list[list[int]]:
    if not eids:
        return []
    sub = build_graph(g.n, [g.edges[e] for e in eids])
    return path_cover(sub, seed).vertex_lists()


def separator_general(g: Graph, rng_seed: int = 0) -> ConstructionResult:
    """Path cover, cut into pieces of ⌈m/n⌉ edges, then binary edge labels.

    Inside every piece the edges get distinct labels (their position).  For
    each bit and each bit value the edges with that value are path-covered;
    two edges of one piece differ in some bit, and the two covers for that
    bit separate them both ways.  Pieces separate edges of different pieces.
    """
    if g.m < 1:
        raise ValueError("graph has no edges")
    n, m = g.n, g.m
    length = math.ceil(m / n)
    bits = math.ceil(math.log2(length)) if length > 1 else 0
    pieces = cut_paths(path_cover(g, rng_seed), length)
    label = [0] * m
    for p in pieces:
        for pos, e in enumerate(p.edges):
            label[e] = pos
    extra: list[list[int]] = []
    for i in range(bits):
        for value in (1, 0):
            chosen = [e for e in range(m) if (label[e] >> i & 1) == value]
            extra += _cover_subgraph(g, chosen, rng_seed + 2 * i + value + 1)
    fam = pieces + PathFamily(g, extra)
    fam, patched = certify(g, fam)
    claimed = upper_general(n, m)[0] if n >= 2 else 1
    return ConstructionResult(fam, "general", claimed, 0, patched, True, rng_seed)

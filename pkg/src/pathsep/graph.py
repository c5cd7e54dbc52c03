"""Graphs, paths and path families.

Vertices are the integers ``0..n-1``.  Every edge gets an EdgeId equal to its
position in the input edge list, so signatures and reports are reproducible.
Edge sets of paths and signatures are stored as Python ints used as bitsets.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

Edge = tuple[int, int]


class GraphError(ValueError):
    """Invalid graph, path or family input."""


def iter_bits(x: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``x`` in increasing order."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[Edge, ...]
    adjacency: tuple[tuple[tuple[int, int], ...], ...] = field(repr=False, compare=False)
    _index: dict[Edge, int] = field(repr=False, compare=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    @property
    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    @property
    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def neighbors(self, v: int) -> list[int]:
        return [u for u, _ in self.adjacency[v]]

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._index

    def edge_id(self, u: int, v: int) -> int:
        try:
            return self._index[(min(u, v), max(u, v))]
        except KeyError:
            raise GraphError(f"({u}, {v}) is not an edge") from None

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists (isolated vertices included)."""
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                v = stack.pop()
                comp.append(v)
                for u, _ in self.adjacency[v]:
                    if not seen[u]:
                        seen[u] = True
                        stack.append(u)
            comps.append(sorted(comp))
        return comps

    def is_forest(self) -> bool:
        return self.m == self.n - len(self.components())


def build_graph(n: int, edge_list: Iterable[Sequence[int]]) -> Graph:
    """Build a simple graph; EdgeIds follow the order of ``edge_list``."""
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    edges: list[Edge] = []
    index: dict[Edge, int] = {}
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for pair in edge_list:
        u, v = (int(x) for x in pair)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"vertex out of range in edge ({u}, {v}) for n={n}")
        if u == v:
            raise GraphError(f"self-loop ({u}, {v})")
        key = (min(u, v), max(u, v))
        if key in index:
            raise GraphError(f"duplicate edge ({u}, {v})")
        eid = len(edges)
        index[key] = eid
        edges.append(key)
        adj[u].append((v, eid))
        adj[v].append((u, eid))
    return Graph(n, tuple(edges), tuple(tuple(a) for a in adj), index)


@dataclass(frozen=True)
class Path:
    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    def __len__(self) -> int:
        """Number of edges."""
        return len(self.edges)

    @cached_property
    def mask(self) -> int:
        x = 0
        for e in self.edges:
            x |= 1 << e
        return x


def validate_path(g: Graph, vs: Sequence[int]) -> Path:
    """Check that ``vs`` is a simple path of ``g`` with at least one edge."""
    vs = tuple(int(v) for v in vs)
    if len(vs) < 2:
        raise GraphError(f"path {list(vs)} has fewer than 2 vertices")
    seen = set()
    for v in vs:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range")
        if v in seen:
            raise GraphError(f"repeated vertex {v} in path {list(vs)}")
        seen.add(v)
    eids = []
    for a, b in zip(vs, vs[1:]):
        key = (min(a, b), max(a, b))
        eid = g._index.get(key)
        if eid is None:
            raise GraphError(f"consecutive pair ({a}, {b}) is not an edge")
        eids.append(eid)
    return Path(vs, tuple(eids))


class PathFamily:
    """Indexed list of paths over one graph."""

    def __init__(self, graph: Graph, paths: Iterable[Path | Sequence[int]] = ()):
        self.graph = graph
        ps = []
        for p in paths:
            ps.append(p if isinstance(p, Path) else validate_path(graph, p))
        self.paths: tuple[Path, ...] = tuple(ps)

    def __len__(self) -> int:
        return len(self.paths)

    def __iter__(self) -> Iterator[Path]:
        return iter(self.paths)

    def __getitem__(self, i: int) -> Path:
        return self.paths[i]

    def __repr__(self) -> str:
        return f"PathFamily(t={len(self)}, n={self.graph.n}, m={self.graph.m})"

    def __add__(self, other: PathFamily) -> PathFamily:
        if other.graph is not self.graph:
            raise GraphError("families over different graphs")
        return PathFamily(self.graph, self.paths + other.paths)

    def vertex_lists(self) -> list[list[int]]:
        return [list(p.vertices) for p in self.paths]

    @property
    def masks(self) -> list[int]:
        return [p.mask for p in self.paths]


def signatures(g: Graph, fam: PathFamily) -> list[int]:
    """Per EdgeId, the bitset of family indices whose path contains the edge."""
    sig = [0] * g.m
    for i, p in enumerate(fam.paths):
        bit = 1 << i
        for e in p.edges:
            sig[e] |= bit
    return sig


def signature_sets(g: Graph, fam: PathFamily) -> list[frozenset[int]]:
    return [frozenset(iter_bits(s)) for s in signatures(g, fam)]

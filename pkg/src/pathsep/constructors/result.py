from __future__ import annotations

from dataclasses import dataclass

from ..graph import Graph, PathFamily
from ..verify import is_separator, unseparated_pairs


@dataclass
class ConstructionResult:
    family: PathFamily
    method: str
    claimed_bound: int | None
    retries: int = 0
    patched: int = 0
    certified: bool = True
    seed: int | None = None
    stats: object = None

    @property
    def size(self) -> int:
        return len(self.family)


def singleton_repairs(g: Graph, fam: PathFamily) -> PathFamily:
    """Add the single-edge path e for every edge e that some f is not separated from.

    A single-edge path {e} contains e and nothing else, so it settles every
    ordered pair (e, f) at once.
    """
    needy = sorted({e for e, _ in unseparated_pairs(g, fam)})
    return PathFamily(g, [g.edges[e] for e in needy])


def certify(g: Graph, fam: PathFamily) -> tuple[PathFamily, int]:
    """Verify ``fam``; patch with single-edge paths if needed. Returns (family, patched)."""
    if is_separator(g, fam):
        return fam, 0
    extra = singleton_repairs(g, fam)
    return fam + extra, len(extra)

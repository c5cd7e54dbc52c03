from .complete import separator_complete
from .forest import separator_forest
from .general import separator_general
from .gnp import separator_gnp
from .hypercube import separator_hypercube
from .result import ConstructionResult

__all__ = [
    "ConstructionResult",
    "construct",
    "separator_complete",
    "separator_forest",
    "separator_general",
    "separator_gnp",
    "separator_hypercube",
]


METHODS = ("auto", "general", "forest", "complete", "hypercube", "gnp")


def construct(g, method: str = "auto", seed: int = 0, p: float | None = None) -> ConstructionResult:
    """Dispatch to a construction by name; ``auto`` recognises the graph family."""
    from ..detect import detect_method, hypercube_dimension

    if method == "auto":
        method = detect_method(g)
    if method == "general":
        return separator_general(g, seed)
    if method == "forest":
        return separator_forest(g)
    if method == "complete":
        if g.m != g.n * (g.n - 1) // 2:
            raise ValueError("graph is not complete")
        return separator_complete(g.n, seed, g)
    if method == "hypercube":
        d = hypercube_dimension(g)
        if d is None or d < 2:
            raise ValueError("graph is not a hypercube Q_d with d >= 2")
        return separator_hypercube(d, g)
    if method == "gnp":
        if p is None:
            p = g.m / (g.n * (g.n - 1) / 2)
        return separator_gnp(g, p, seed)
    raise ValueError(f"unknown method {method!r}")

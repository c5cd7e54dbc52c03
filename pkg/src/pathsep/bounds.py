"""Closed-form lower and upper bounds on the path separation number."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

from .graph import Graph

EPS = 1e-9


def binary_entropy(x: float) -> float:
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"binary entropy undefined at {x}")
    if x == 0.0 or x == 1.0:
        return 0.0
    return -x * math.log2(x) - (1 - x) * math.log2(1 - x)


def entropy_lower_bound(n: int, m: int) -> tuple[float, float]:
    """(log2 m / H2((n-1)/m), m ln m / ((n-1) ln(en/2))).

    The second value is the weaker closed form reached at the end of the
    entropy argument; it sits strictly below the first.
    """
    if n < 2 or m < n:
        raise ValueError(f"entropy bound needs n >= 2 and m >= n, got n={n}, m={m}")
    x = (n - 1) / m
    main = math.log2(m) / binary_entropy(x)
    closed = m * math.log(m) / ((n - 1) * math.log(math.e * n / 2))
    return main, closed


def log_form_lower_bound(n: int, m: int) -> float:
    """m ln m / (n ln(en/2)), the leftmost expression of the general bound."""
    if n < 2 or m < n:
        raise ValueError(f"bound needs n >= 2 and m >= n, got n={n}, m={m}")
    return m * math.log(m) / (n * math.log(math.e * n / 2))


def info_lower_bound(m: int) -> int:
    """⌈log2 m⌉: the minimum number of unrestricted tests."""
    return math.ceil(math.log2(m)) if m > 1 else 0


def label_bits(n: int, m: int) -> int:
    return math.ceil(math.log2(math.ceil(m / n)))


def upper_general(n: int, m: int) -> tuple[int, float]:
    """(2n⌈log2⌈m/n⌉⌉ + n, 3n log2 n)."""
    if n < 2 or m < 1:
        raise ValueError("upper bound needs n >= 2 and m >= 1")
    return 2 * n * label_bits(n, m) + n, 3 * n * math.log2(n)


def _leaf_degree2_paths(g: Graph) -> tuple[int, int, int]:
    if not g.is_forest():
        raise ValueError("graph is not a forest")
    deg = g.degrees()
    v1 = sum(1 for d in deg if d == 1)
    v2 = sum(1 for d in deg if d == 2)
    p = 0
    for comp in g.components():
        if len(comp) >= 2 and all(deg[v] <= 2 for v in comp):
            p += 1
    return v1, v2, p


def forest_psn(f: Graph) -> int:
    """v1 + v2 - p; isolated vertices are not path-components."""
    v1, v2, p = _leaf_degree2_paths(f)
    return v1 + v2 - p


def mintree_bound(n: int) -> int:
    if n < 2:
        raise ValueError("need n >= 2")
    return math.ceil(n / 2) + 1


def is_extremal_tree(t: Graph) -> bool:
    """Degree sequence attains v1 + v2 = ⌈n/2⌉ + 1.

    Even n: every degree is 1 or 3.  Odd n: exactly one vertex of degree 2
    or 4, the rest 1 or 3.
    """
    if not t.is_forest() or len(t.components()) != 1 or t.n < 2:
        return False
    deg = t.degrees()
    other = [d for d in deg if d not in (1, 3)]
    if t.n % 2 == 0:
        return not other
    return len(other) == 1 and other[0] in (2, 4)


def bipartite_lower_bound(a: int, n: int) -> float:
    """Entropy-style lower bound for K_{a,n-a}."""
    if not 1 <= a <= (n - 1) / 2:
        raise ValueError(f"need 1 <= a <= (n-1)/2, got a={a}, n={n}")
    e = a * (n - a)
    return e / (2 * a + 1) * math.log(e) / math.log(math.e * n / 2)


def hypercube_bounds(d: int) -> tuple[float, int]:
    """(lower, upper) for Q_d.

    d = 2 is exact (4); d = 3 uses the entropy value directly; d >= 4 uses
    d^2 / (2 log2 d).
    """
    if d < 2:
        raise ValueError("need d >= 2")
    upper = 2 * d * (d + 1) - 8
    if d == 2:
        return 4.0, upper
    if d == 3:
        return entropy_lower_bound(8, 12)[0], upper
    return d * d / (2 * math.log2(d)), upper


@dataclass
class BoundsReport:
    n: int
    m: int
    entropy_lb: float | None
    log_form_lb: float | None
    info_lb: int
    upper_general: int | None
    upper_cap: float | None
    tree_exact: int | None = None
    mintree_lb: int | None = None
    hypercube_lb: float | None = None
    bipartite_lb: float | None = None

    def as_dict(self) -> dict:
        return asdict(self)


def bounds_report(g: Graph) -> BoundsReport:
    from .detect import bipartite_parts, hypercube_dimension

    n, m = g.n, g.m
    ent = logf = None
    if n >= 2 and m >= n:
        ent = entropy_lower_bound(n, m)[0]
        logf = log_form_lower_bound(n, m)
    up = cap = None
    if n >= 2 and m >= 1:
        up, cap = upper_general(n, m)
    rep = BoundsReport(n, m, ent, logf, info_lower_bound(m), up, cap)
    if g.is_forest():
        rep.tree_exact = forest_psn(g)
        if len(g.components()) == 1 and n >= 2:
            rep.mintree_lb = mintree_bound(n)
    d = hypercube_dimension(g)
    if d is not None and d >= 2:
        rep.hypercube_lb = hypercube_bounds(d)[0]
    parts = bipartite_parts(g)
    if parts is not None:
        a = min(parts)
        if 1 <= a <= (n - 1) / 2:
            rep.bipartite_lb = bipartite_lower_bound(a, n)
    return rep

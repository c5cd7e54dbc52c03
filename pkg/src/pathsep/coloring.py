"""Proper edge colourings: Misra–Gries (at most Δ+1 colours) and greedy."""

from __future__ import annotations

from typing import Sequence


def misra_gries(n: int, edges: Sequence[tuple[int, int]]) -> list[int]:
    """Colour of each edge, in input order, using colours 0..Δ."""
    at: list[dict[int, int]] = [dict() for _ in range(n)]  # at[v][colour] = neighbour
    colour: dict[tuple[int, int], int] = {}

    def key(a: int, b: int) -> tuple[int, int]:
        return (a, b) if a < b else (b, a)

    def free(v: int) -> int:
        c = 0
        while c in at[v]:
            c += 1
        return c

    def set_colour(a: int, b: int, c: int) -> None:
        colour[key(a, b)] = c
        at[a][c] = b
        at[b][c] = a

    def clear(a: int, b: int) -> int:
        c = colour.pop(key(a, b))
        del at[a][c]
        del at[b][c]
        return c

    for u, v in edges:
        # maximal fan at u starting with the uncoloured edge uv
        fan = [v]
        in_fan = {v}
        grown = True
        while grown:
            grown = False
            last = fan[-1]
            for c, x in at[u].items():
                if x not in in_fan and c not in at[last]:
                    fan.append(x)
                    in_fan.add(x)
                    grown = True
                    break
        c = free(u)
        d = free(fan[-1])
        # invert the cd-path that starts at u with a d-edge
        if c != d:
            path = []
            x, want = u, d
            while want in at[x]:
                y = at[x][want]
                path.append((x, y, want))
                x = y
                want = c if want == d else d
            for a, b, _ in path:
                clear(a, b)
            for a, b, old in path:
                set_colour(a, b, c if old == d else d)
        # shortest fan prefix ending at a vertex where d is free
        k = 0
        while True:
            w = fan[k]
            if d not in at[w]:
                break
            k += 1
            nxt_c = colour.get(key(u, fan[k]))
            if nxt_c is None or nxt_c in at[fan[k - 1]]:
                raise AssertionError("fan prefix broken")
        shifted = []
        for i in range(k):
            shifted.append(clear(u, fan[i + 1]))
        for i in range(k):
            set_colour(u, fan[i], shifted[i])
        set_colour(u, fan[k], d)
    return [colour[key(a, b)] for a, b in edges]


def greedy_colouring(n: int, edges: Sequence[tuple[int, int]]) -> list[int]:
    """First-fit colouring; at most 2Δ-1 colours."""
    used: list[set[int]] = [set() for _ in range(n)]
    out = []
    for a, b in edges:
        c = 0
        while c in used[a] or c in used[b]:
            c += 1
        used[a].add(c)
        used[b].add(c)
        out.append(c)
    return out


def colour_classes(edges: Sequence[tuple[int, int]], colours: Sequence[int]) -> list[list[tuple[int, int]]]:
    classes: dict[int, list[tuple[int, int]]] = {}
    for e, c in zip(edges, colours):
        classes.setdefault(c, []).append(e)
    return [classes[c] for c in sorted(classes)]

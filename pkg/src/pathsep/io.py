"""Text formats for graphs and path families."""

from __future__ import annotations

import os
import tempfile

from .graph import Graph, GraphError, PathFamily, build_graph, validate_path


class ParseError(ValueError):
    def __init__(self, line: int, msg: str):
        super().__init__(f"line {line}: {msg}")
        self.line = line


def _content_lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line


def _ints(no: int, line: str) -> list[int]:
    try:
        return [int(x) for x in line.split()]
    except ValueError:
        raise ParseError(no, f"expected integers, got {line!r}") from None


def parse_graph(text: str) -> Graph:
    """First line ``n m``, then m lines ``u v``; ``#`` starts a comment."""
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError(1, "empty graph file")
    no, head = lines[0]
    nums = _ints(no, head)
    if len(nums) != 2 or min(nums) < 0:
        raise ParseError(no, f"header must be 'n m', got {head!r}")
    n, m = nums
    body = lines[1:]
    if len(body) != m:
        raise ParseError(body[-1][0] if body else no, f"header says {m} edges, found {len(body)}")
    edges = []
    for no, line in body:
        pair = _ints(no, line)
        if len(pair) != 2:
            raise ParseError(no, f"edge line must be 'u v', got {line!r}")
        edges.append((no, pair))
    try:
        return build_graph(n, [p for _, p in edges])
    except GraphError as err:
        # locate the offending line by rebuilding incrementally
        for k in range(1, len(edges) + 1):
            try:
                build_graph(n, [p for _, p in edges[:k]])
            except GraphError:
                raise ParseError(edges[k - 1][0], str(err)) from None
        raise


def emit_graph(g: Graph) -> str:
    return "".join([f"{g.n} {g.m}\n"] + [f"{u} {v}\n" for u, v in g.edges])


def parse_family(text: str, g: Graph) -> PathFamily:
    """One path per line as space-separated vertex ids; line order is the index."""
    paths = []
    for no, line in _content_lines(text):
        try:
            paths.append(validate_path(g, _ints(no, line)))
        except GraphError as err:
            raise ParseError(no, str(err)) from None
    return PathFamily(g, paths)


def emit_family(fam: PathFamily) -> str:
    return "".join(" ".join(map(str, p.vertices)) + "\n" for p in fam.paths)


def read_graph(path: str) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def read_family(path: str, g: Graph) -> PathFamily:
    with open(path, encoding="utf-8") as fh:
        return parse_family(fh.read(), g)


def write_atomic(path: str, text: str) -> None:
    d = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".pathsep-")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        os.unlink(tmp)
        raise

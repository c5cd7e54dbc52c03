import itertools

import pytest

from pathsep.graph import build_graph
from pathsep.generators import gen_cycle, gen_path


def literal_is_separator(g, fam):
    """Separator definition checked pair by pair, with no bitset tricks."""
    edge_sets = [set(p.edges) for p in fam]
    if g.m == 1:
        return any(0 in s for s in edge_sets)
    for e, f in itertools.permutations(range(g.m), 2):
        if not any(e in s and f not in s for s in edge_sets):
            return False
    return True


def literal_is_test_set(g, fam):
    """Some nonempty index set's edge intersection is exactly {e}, for every edge e."""
    edge_sets = [set(p.edges) for p in fam]
    everything = set(range(g.m))
    for e in range(g.m):
        ok = False
        for k in range(1, len(edge_sets) + 1):
            for idx in itertools.combinations(range(len(edge_sets)), k):
                inter = set(everything)
                for i in idx:
                    inter &= edge_sets[i]
                if inter == {e}:
                    ok = True
                    break
            if ok:
                break
        if not ok:
            return False
    return True


@pytest.fixture
def p3():
    return gen_path(3)


@pytest.fixture
def c4():
    return gen_cycle(4)


@pytest.fixture
def k4():
    return build_graph(4, itertools.combinations(range(4), 2))


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)

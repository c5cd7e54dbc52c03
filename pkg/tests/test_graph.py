import pytest

from pathsep.generators import gen_complete, gen_cycle, gen_path
from pathsep.graph import GraphError, PathFamily, build_graph, signature_sets, signatures, validate_path


def test_single_edge():
    g = build_graph(2, [(0, 1)])
    assert g.m == 1
    assert g.degrees() == [1, 1]


def test_cycle_degrees(c4):
    assert c4.m == 4
    assert c4.degrees() == [2, 2, 2, 2]


def test_k4_degrees(k4):
    assert k4.max_degree == k4.min_degree == 3


def test_edge_ids_follow_input_order():
    g = build_graph(3, [(2, 1), (0, 1)])
    assert g.edge_id(1, 2) == 0
    assert g.edge_id(1, 0) == 1
    ids = sorted(e for v in range(3) for _, e in g.adjacency[v])
    assert ids == [0, 0, 1, 1]


@pytest.mark.parametrize("edges, word", [
    ([(0, 1), (1, 0)], "duplicate"),
    ([(1, 1)], "self-loop"),
    ([(0, 5)], "out of range"),
])
def test_build_graph_rejects(edges, word):
    with pytest.raises(GraphError, match=word) as info:
        build_graph(3, edges)
    assert str(edges[-1][0]) in str(info.value)


def test_validate_path_ok():
    p = validate_path(gen_path(4), [0, 1, 2, 3])
    assert len(p) == 3


def test_cycle_is_not_a_path(c4):
    with pytest.raises(GraphError, match="repeated vertex 0"):
        validate_path(c4, [0, 1, 2, 3, 0])


def test_k4_any_order(k4):
    assert len(validate_path(k4, [0, 2, 1, 3])) == 3


def test_non_adjacent_pair(c4):
    with pytest.raises(GraphError, match=r"\(0, 2\) is not an edge"):
        validate_path(c4, [0, 2])


def test_signatures_singletons(p3):
    fam = PathFamily(p3, [[0, 1], [1, 2]])
    assert signature_sets(p3, fam) == [{0}, {1}]


def test_signatures_one_long_path(p3):
    fam = PathFamily(p3, [[0, 1, 2]])
    assert signature_sets(p3, fam) == [{0}, {0}]


def test_signatures_c4_singletons(c4):
    fam = PathFamily(c4, [list(e) for e in c4.edges])
    assert signature_sets(c4, fam) == [{0}, {1}, {2}, {3}]


def test_membership_total():
    g = gen_complete(6)
    fam = PathFamily(g, [[0, 1, 2, 3, 4, 5], [5, 0, 2], [3, 1]])
    total = sum(bin(s).count("1") for s in signatures(g, fam))
    assert total == sum(len(p.vertices) - 1 for p in fam)
    assert all(len(p) <= g.n - 1 for p in fam)


def test_components_and_forest():
    g = build_graph(5, [(0, 1), (1, 2), (3, 4)])
    assert g.components() == [[0, 1, 2], [3, 4]]
    assert g.is_forest()
    assert not gen_cycle(3).is_forest()

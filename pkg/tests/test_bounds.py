import math

import pytest
from hypothesis import given, strategies as st

from pathsep.bounds import (
    binary_entropy, bipartite_lower_bound, bounds_report, entropy_lower_bound, forest_psn,
    hypercube_bounds, info_lower_bound, is_extremal_tree, log_form_lower_bound, mintree_bound,
    upper_general,
)
from pathsep.generators import (
    gen_complete, gen_complete_bipartite, gen_extremal_tree, gen_hypercube, gen_path, gen_spider, gen_star,
)
from pathsep.graph import build_graph

# reference values computed with mpmath at 40 digits
H_7_12 = 0.9798687566511528
H_002 = 0.1414405425418206


def test_entropy_values():
    assert binary_entropy(0.5) == 1.0
    assert binary_entropy(0.0) == binary_entropy(1.0) == 0.0
    assert binary_entropy(7 / 12) == pytest.approx(H_7_12, rel=1e-12)
    assert binary_entropy(0.02) == pytest.approx(H_002, rel=1e-12)
    with pytest.raises(ValueError):
        binary_entropy(1.5)


def test_q3_entropy_bound():
    assert entropy_lower_bound(8, 12)[0] == pytest.approx(3.658614968981457, rel=1e-12)
    assert hypercube_bounds(3) == (pytest.approx(3.658614968981457), 16)


def test_k100_bounds():
    main, closed = entropy_lower_bound(100, 4950)
    assert main == pytest.approx(86.77294776513908, rel=1e-12)
    assert closed == pytest.approx(86.59510395372455, rel=1e-12)
    assert upper_general(100, 4950)[0] == 1300
    assert upper_general(8, 28)[0] == 40


def test_bipartite_values():
    assert bipartite_lower_bound(10, 100) == pytest.approx(59.35053720642332, rel=1e-12)
    assert bipartite_lower_bound(1, 10) == pytest.approx(2.526089507858764, rel=1e-12)
    with pytest.raises(ValueError):
        bipartite_lower_bound(5, 10)


def test_hypercube_values():
    assert hypercube_bounds(2) == (4.0, 4)
    assert hypercube_bounds(10)[0] == pytest.approx(15.05149978319906, rel=1e-12)
    assert hypercube_bounds(10)[1] == 212


def test_info_bound():
    assert [info_lower_bound(m) for m in (1, 2, 3, 4, 5, 1024, 1025)] == [0, 1, 2, 2, 3, 10, 11]


@pytest.mark.parametrize("n, m", [(3, 3), (5, 10), (40, 780), (8, 12)])
def test_bound_error_cases_and_order(n, m):
    main, closed = entropy_lower_bound(n, m)
    assert closed < main
    assert log_form_lower_bound(n, m) <= closed


def test_bound_domain():
    with pytest.raises(ValueError):
        entropy_lower_bound(5, 4)
    with pytest.raises(ValueError):
        entropy_lower_bound(1, 3)


@given(st.integers(4, 400), st.floats(0.0, 1.0))
def test_bounds_ordered(n, frac):
    lo = n
    hi = n * (n - 1) // 2
    m = lo + int(frac * (hi - lo))
    main, closed = entropy_lower_bound(n, m)
    assert log_form_lower_bound(n, m) <= closed < main
    assert main <= upper_general(n, m)[0] + 1e-9


@pytest.mark.parametrize("g, value", [
    (gen_path(2), 1), (gen_path(5), 4), (gen_star(3), 3), (gen_star(6), 6), (gen_spider(3, 2), 6),
])
def test_forest_formula(g, value):
    assert forest_psn(g) == value


def test_forest_with_isolated_vertex():
    g = build_graph(6, [(0, 1), (1, 2), (3, 4)])
    # P_3 needs 2, P_2 needs 1, the isolated vertex nothing
    assert forest_psn(g) == 3


def test_forest_rejects_cycles():
    with pytest.raises(ValueError):
        forest_psn(gen_complete(3))


@pytest.mark.parametrize("n", range(4, 41))
def test_extremal_trees(n):
    t = gen_extremal_tree(n)
    assert is_extremal_tree(t)
    assert forest_psn(t) == mintree_bound(n)


def test_report():
    rep = bounds_report(gen_hypercube(4))
    assert rep.hypercube_lb == pytest.approx(4.0)
    assert rep.tree_exact is None
    rep = bounds_report(gen_complete_bipartite(3, 8))
    assert rep.bipartite_lb == pytest.approx(bipartite_lower_bound(3, 11))
    d = bounds_report(gen_star(5)).as_dict()
    assert d["tree_exact"] == 5 and d["mintree_lb"] == 4 and d["entropy_lb"] is None
    assert math.isclose(bounds_report(gen_complete(10)).entropy_lb, entropy_lower_bound(10, 45)[0])

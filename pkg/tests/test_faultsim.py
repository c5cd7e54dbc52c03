import itertools

import pytest
from hypothesis import given, settings, strategies as st

from pathsep.constructors import construct
from pathsep.exact import enumerate_paths
from pathsep.faultsim import (
    AMBIGUOUS, IDENTIFIED, INCONSISTENT, NO_FAULT, FaultScenario, campaign, decode, decode_intersection, observe,
)
from pathsep.generators import gen_complete, gen_cycle, gen_gnp, gen_hypercube, gen_path, gen_random_tree
from pathsep.graph import PathFamily, signatures
from pathsep.verify import check_test_set, is_separator


@pytest.mark.parametrize("g", [gen_random_tree(30, 2), gen_complete(9), gen_hypercube(4), gen_gnp(25, 0.4, 1)],
                         ids=["tree", "k9", "q4", "gnp"])
def test_separator_identifies_everything(g):
    fam = construct(g, seed=3).family
    rep = campaign(g, fam)
    assert rep.trials == g.m
    assert rep.identification_rate == 1.0 and rep.intersection_rate == 1.0
    assert rep.no_fault_correct and rep.no_fault_correct_intersection
    assert rep.info_lb <= rep.family_size


def test_empty_family_identifies_nothing():
    g = gen_path(4)
    rep = campaign(g, PathFamily(g, []))
    assert rep.identified == 0 and rep.missed == 3
    assert not rep.no_fault_correct


def test_one_long_path_is_ambiguous(p3):
    fam = PathFamily(p3, [[0, 1, 2]])
    rep = campaign(p3, fam)
    assert rep.ambiguous == 2
    out = decode(p3, fam, {0})
    assert out.kind == AMBIGUOUS and out.edges == {0, 1}


def test_observe_matches_signatures():
    g = gen_complete(7)
    fam = construct(g, "general").family
    sig = signatures(g, fam)
    for e in range(g.m):
        assert sum(1 << i for i in observe(FaultScenario(g, fam, e))) == sig[e]


def test_observe_and_decode(c4):
    fam = PathFamily(c4, [[0, 1, 2], [1, 2, 3], [2, 3, 0], [3, 0, 1]])
    failing = observe(FaultScenario(c4, fam, 1))
    assert failing == {0, 1}
    assert decode(c4, fam, failing).edge == 1
    assert decode(c4, fam, set()).kind == NO_FAULT
    assert decode(c4, fam, {0, 2}).kind == INCONSISTENT
    assert decode_intersection(c4, fam, {0, 2}).kind == INCONSISTENT


def test_bad_fault_edge():
    with pytest.raises(ValueError):
        FaultScenario(gen_path(3), PathFamily(gen_path(3), []), 5)


def test_uncovered_edges_break_no_fault_detection():
    g = gen_path(3)
    fam = PathFamily(g, [[0, 1]])
    out = decode_intersection(g, fam, set())
    assert out.kind == IDENTIFIED and out.edge == 1
    assert decode(g, fam, set()).kind == NO_FAULT


def test_sampled_campaign_is_seeded():
    g = gen_complete(8)
    fam = construct(g, "general").family
    a, b = campaign(g, fam, 50, 4), campaign(g, fam, 50, 4)
    assert a.failures == b.failures and a.trials == 50
    assert campaign(g, fam, fail=3).trials == 1


def test_decoders_agree_off_the_empty_set():
    # over every family of up to three paths of C_4 the two decoders give the
    # same answer whenever at least one test fails
    g = gen_cycle(4)
    paths = enumerate_paths(g)
    for k in range(1, 4):
        for combo in itertools.combinations(paths, k):
            fam = PathFamily(g, list(combo))
            for e in range(g.m):
                failing = observe(FaultScenario(g, fam, e))
                if failing:
                    assert decode(g, fam, failing) == decode_intersection(g, fam, failing)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 6), st.floats(0.3, 1.0), st.integers(0, 10**6))
def test_identification_needs_distinct_signatures(n, p, seed):
    g = gen_gnp(n, p, seed)
    if g.m < 2:
        return
    paths = enumerate_paths(g, max_edges=40)[: 3 * g.m : 2]
    fam = PathFamily(g, paths)
    rep = campaign(g, fam)
    sig = signatures(g, fam)
    full = rep.identified == g.m and rep.no_fault_correct
    assert full == (0 not in sig and len(set(sig)) == g.m)
    if is_separator(g, fam):
        assert full
    assert is_separator(g, fam) == check_test_set(g, fam)


def test_identification_without_separation():
    # distinct signatures {0}, {2}, {1, 2}: every single fault is located,
    # but the edge with signature {2} is never tested without the third edge
    g = gen_complete(3)
    fam = PathFamily(g, [[0, 1], [1, 2], [0, 2, 1]])
    rep = campaign(g, fam)
    assert rep.identification_rate == 1.0 and rep.no_fault_correct
    assert not is_separator(g, fam)

import pytest

from triconflict import (
    AgentSet,
    BOOLEAN,
    Evaluation,
    EvaluationError,
    PartitionError,
    Thresholds,
    Trisection,
    TwoWaySplit,
    Universe,
    UniverseMismatchError,
    boolean_pair,
    compose_three_way,
    degree_pair,
    trisect_agents_fqw,
    trisect_agents_generic,
    trisect_agents_smz,
    two_way_accept_agents,
    two_way_reject_agents,
)

from oracles import MIDEAST_AGENTS, MIDEAST_ISSUES, MIDEAST_VALUES, fqw, powerset, smz

HALF = Thresholds("1/2", "1/2")
TAIL = ("c2", "c3", "c4", "c5")


def regions(t):
    r = t.regions()
    return r["pos"], r["neg"], r["bnd"]


def test_smz_single_issue(mideast):
    t = trisect_agents_smz(mideast, mideast.issue_set(["c1"]))
    assert regions(t) == (["x2", "x3", "x5"], ["x1"], ["x4", "x6"])
    assert t.universe is Universe.AGENTS and t.subject.ids() == ["c1"]


def test_smz_empty_strategy(mideast):
    pos, neg, bnd = regions(trisect_agents_smz(mideast, mideast.issue_set([])))
    assert pos == neg == [] and bnd == MIDEAST_AGENTS


def test_smz_full_strategy(mideast):
    assert regions(trisect_agents_smz(mideast, mideast.all_issues())) == ([], [], MIDEAST_AGENTS)


def test_generic_boolean_example(mideast):
    acc, rej = boolean_pair("agents")
    t = trisect_agents_generic(mideast, mideast.issue_set(["c1"]), acc, rej)
    assert regions(t) == (["x2", "x3", "x5"], ["x1"], ["x4", "x6"])


def test_generic_degree_example(mideast):
    acc, rej = degree_pair("agents", HALF)
    t = trisect_agents_generic(mideast, mideast.issue_set(TAIL), acc, rej)
    assert regions(t) == (["x1"], ["x2", "x3", "x5"], ["x4", "x6"])


def test_generic_degree_propagates_empty_strategy(mideast):
    acc, rej = degree_pair("agents", HALF)
    with pytest.raises(EvaluationError):
        trisect_agents_generic(mideast, mideast.issue_set([]), acc, rej)


def test_generic_constant_evaluations(mideast):
    always = Evaluation("always", Universe.AGENTS, lambda t, e, s: True, BOOLEAN)
    never = Evaluation("never", Universe.AGENTS, lambda t, e, s: False, BOOLEAN)
    t = trisect_agents_generic(mideast, mideast.issue_set(["c2"]), always, never)
    assert regions(t) == (MIDEAST_AGENTS, [], [])


def test_generic_rejects_issue_evaluations(mideast):
    acc, rej = boolean_pair("issues")
    with pytest.raises(UniverseMismatchError):
        trisect_agents_generic(mideast, mideast.issue_set(["c1"]), acc, rej)


def test_fqw_examples(mideast):
    t = trisect_agents_fqw(mideast, mideast.issue_set(TAIL), HALF)
    assert regions(t) == (["x1"], ["x2", "x3", "x5"], ["x4", "x6"])
    # x4 has rejection degree exactly 1/2 and x6 acceptance degree exactly 1/2
    assert t.region_of("x4") == "bnd" and t.region_of("x6") == "bnd"
    t = trisect_agents_fqw(mideast, mideast.issue_set(["c1"]), HALF)
    assert regions(t) == (["x2", "x3", "x5"], ["x1"], ["x4", "x6"])


def test_fqw_float_thresholds_match_rationals(mideast):
    a = trisect_agents_fqw(mideast, mideast.issue_set(TAIL), Thresholds(0.5, 0.5))
    assert a.same_regions(trisect_agents_fqw(mideast, mideast.issue_set(TAIL), HALF))


def test_fqw_zero_thresholds(mideast):
    t = trisect_agents_fqw(mideast, mideast.issue_set(TAIL), Thresholds(0, 0))
    expected = [x for x in MIDEAST_AGENTS
                if any(v == 1 for v in MIDEAST_VALUES[MIDEAST_AGENTS.index(x)][1:])
                and not any(v == -1 for v in MIDEAST_VALUES[MIDEAST_AGENTS.index(x)][1:])]
    assert t.pos.ids() == expected == ["x1"]


def test_fqw_rejects_empty_strategy(mideast):
    with pytest.raises(EvaluationError, match="empty strategy"):
        trisect_agents_fqw(mideast, mideast.issue_set([]), HALF)


def test_two_way_examples(mideast):
    acc, rej = boolean_pair("agents")
    c1 = mideast.issue_set(["c1"])
    a = two_way_accept_agents(mideast, c1, acc)
    assert a.in_region.ids() == ["x2", "x3", "x5"] and a.out_region.ids() == ["x1", "x4", "x6"]
    r = two_way_reject_agents(mideast, c1, rej)
    assert r.in_region.ids() == ["x1"] and r.out_region.ids() == ["x2", "x3", "x4", "x5", "x6"]
    full = mideast.all_issues()
    assert two_way_accept_agents(mideast, full, acc).in_region.ids() == MIDEAST_AGENTS
    assert two_way_reject_agents(mideast, full, rej).in_region.ids() == MIDEAST_AGENTS


def test_two_way_degree_examples(mideast):
    acc, rej = degree_pair("agents", HALF)
    tail = mideast.issue_set(TAIL)
    assert two_way_accept_agents(mideast, tail, acc).in_region.ids() == ["x1"]
    assert two_way_reject_agents(mideast, tail, rej).in_region.ids() == ["x2", "x3", "x5"]


def _split(ins, kind):
    s = AgentSet.from_ids(tuple(MIDEAST_AGENTS), ins)
    return TwoWaySplit(s, ~s, kind, Universe.AGENTS)


def test_compose_examples():
    t = compose_three_way(_split(["x2", "x3", "x5"], "acceptance"), _split(["x1"], "rejection"))
    assert regions(t) == (["x2", "x3", "x5"], ["x1"], ["x4", "x6"])
    assert regions(compose_three_way(_split(MIDEAST_AGENTS, "acceptance"), _split([], "rejection")))[0] == MIDEAST_AGENTS
    assert regions(compose_three_way(_split(MIDEAST_AGENTS, "acceptance"), _split(MIDEAST_AGENTS, "rejection")))[2] == MIDEAST_AGENTS


def test_compose_checks_kinds_and_universes(mideast):
    with pytest.raises(ValueError):
        compose_three_way(_split([], "rejection"), _split([], "acceptance"))
    other = AgentSet.from_ids(("y1",), [])
    with pytest.raises(UniverseMismatchError):
        compose_three_way(_split([], "acceptance"), TwoWaySplit(other, ~other, "rejection", Universe.AGENTS))
    acc, rej = boolean_pair("agents")
    with pytest.raises(UniverseMismatchError):
        compose_three_way(two_way_accept_agents(mideast, mideast.issue_set(["c1"]), acc),
                          two_way_reject_agents(mideast, mideast.issue_set(["c2"]), rej))


def test_trisection_refuses_broken_partitions():
    U = tuple(MIDEAST_AGENTS)
    a = AgentSet.from_ids(U, ["x1", "x2"])
    b = AgentSet.from_ids(U, ["x2"])
    c = AgentSet.from_ids(U, ["x3", "x4", "x5", "x6"])
    with pytest.raises(PartitionError):
        Trisection(a, b, c, Universe.AGENTS)
    with pytest.raises(PartitionError):
        Trisection(a, AgentSet.empty(U), AgentSet.from_ids(U, ["x3"]), Universe.AGENTS)
    with pytest.raises(PartitionError):
        TwoWaySplit(a, b, "acceptance", Universe.AGENTS)


def test_all_strategies_against_oracle(mideast):
    acc, rej = boolean_pair("agents")
    dacc, drej = degree_pair("agents", HALF)
    for subset in powerset(MIDEAST_ISSUES):
        s = mideast.issue_set(subset)
        expected = smz(MIDEAST_VALUES, MIDEAST_AGENTS, MIDEAST_ISSUES, subset)
        got = trisect_agents_smz(mideast, s)
        assert (set(got.pos), set(got.neg), set(got.bnd)) == expected
        assert got.same_regions(trisect_agents_generic(mideast, s, acc, rej))
        composed = compose_three_way(two_way_accept_agents(mideast, s, acc), two_way_reject_agents(mideast, s, rej))
        assert composed.same_regions(got)
        if subset:
            expected = fqw(MIDEAST_VALUES, MIDEAST_AGENTS, MIDEAST_ISSUES, subset, "1/2", "1/2")
            got = trisect_agents_fqw(mideast, s, HALF)
            assert (set(got.pos), set(got.neg), set(got.bnd)) == expected
            assert got.same_regions(trisect_agents_generic(mideast, s, dacc, drej))

import pytest

from triconflict import (
    EvaluationError,
    Thresholds,
    UniverseMismatchError,
    boolean_pair,
    compose_three_way,
    degree_pair,
    trisect_agents_fqw,
    trisect_agents_smz,
    trisect_issues_fqw,
    trisect_issues_generic,
    trisect_issues_smz,
    two_way_accept_issues,
    two_way_reject_issues,
)

from oracles import MIDEAST_AGENTS, MIDEAST_ISSUES, MIDEAST_VALUES, fqw, powerset, smz, transpose

HALF = Thresholds("1/2", "1/2")
GROUP = ["x2", "x3", "x5"]


def regions(t):
    r = t.regions()
    return r["pos"], r["neg"], r["bnd"]


def test_smz_examples(mideast):
    assert regions(trisect_issues_smz(mideast, mideast.agent_set(GROUP))) == (["c1"], ["c4"], ["c2", "c3", "c5"])
    assert regions(trisect_issues_smz(mideast, mideast.agent_set([]))) == ([], [], MIDEAST_ISSUES)
    assert regions(trisect_issues_smz(mideast, mideast.all_agents())) == ([], [], MIDEAST_ISSUES)


def test_generic_boolean_examples(mideast):
    acc, rej = boolean_pair("issues")
    t = trisect_issues_generic(mideast, mideast.agent_set(GROUP), acc, rej)
    assert regions(t) == (["c1"], ["c4"], ["c2", "c3", "c5"])
    assert regions(trisect_issues_generic(mideast, mideast.all_agents(), acc, rej)) == ([], [], MIDEAST_ISSUES)


def test_fqw_examples(mideast):
    t = trisect_issues_fqw(mideast, mideast.agent_set(GROUP), HALF)
    assert regions(t) == (["c1"], ["c2", "c3", "c4", "c5"], [])
    t = trisect_issues_fqw(mideast, mideast.agent_set(["x1"]), HALF)
    assert regions(t) == (["c2", "c3", "c4", "c5"], ["c1"], [])


def test_fqw_rejects_empty_group(mideast):
    with pytest.raises(EvaluationError, match="empty agent group"):
        trisect_issues_fqw(mideast, mideast.agent_set([]), HALF)


def test_issue_model_needs_agent_subject(mideast):
    with pytest.raises(UniverseMismatchError):
        trisect_issues_smz(mideast, mideast.issue_set(["c1"]))


def test_two_way_examples(mideast):
    acc, rej = boolean_pair("issues")
    g = mideast.agent_set(GROUP)
    assert two_way_accept_issues(mideast, g, acc).in_region.ids() == ["c1"]
    assert two_way_reject_issues(mideast, g, rej).in_region.ids() == ["c4"]
    U = mideast.all_agents()
    assert two_way_accept_issues(mideast, U, acc).in_region.ids() == MIDEAST_ISSUES
    assert two_way_reject_issues(mideast, U, rej).in_region.ids() == MIDEAST_ISSUES


def test_all_groups_against_oracle(mideast):
    cols = transpose(MIDEAST_VALUES)
    acc, rej = boolean_pair("issues")
    dacc, drej = degree_pair("issues", HALF)
    for group in powerset(MIDEAST_AGENTS):
        g = mideast.agent_set(group)
        got = trisect_issues_smz(mideast, g)
        assert (set(got.pos), set(got.neg), set(got.bnd)) == smz(cols, MIDEAST_ISSUES, MIDEAST_AGENTS, group)
        assert got.same_regions(trisect_issues_generic(mideast, g, acc, rej))
        composed = compose_three_way(two_way_accept_issues(mideast, g, acc), two_way_reject_issues(mideast, g, rej))
        assert composed.same_regions(got)
        if group:
            got = trisect_issues_fqw(mideast, g, HALF)
            assert (set(got.pos), set(got.neg), set(got.bnd)) == fqw(
                cols, MIDEAST_ISSUES, MIDEAST_AGENTS, group, "1/2", "1/2")
            assert got.same_regions(trisect_issues_generic(mideast, g, dacc, drej))


def test_mirror_through_transpose(mideast):
    flipped = mideast.transpose()
    for group in powerset(MIDEAST_AGENTS):
        issues_side = trisect_issues_smz(mideast, mideast.agent_set(group))
        agents_side = trisect_agents_smz(flipped, flipped.issue_set(group))
        assert issues_side.regions() == agents_side.regions()
        if group:
            a = trisect_issues_fqw(mideast, mideast.agent_set(group), HALF)
            b = trisect_agents_fqw(flipped, flipped.issue_set(group), HALF)
            assert a.regions() == b.regions()

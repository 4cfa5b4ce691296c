import pytest

from triconflict import AgentSet, IssueSet, PartitionError, TableError, ThresholdError, trisect_agents_smz
from triconflict.rough import (
    CompatibilityRelation,
    Partition,
    apr_f,
    apr_g,
    apr_lower,
    apr_upper,
    equivalence_classes,
    prob_regions,
)

from oracles import MIDEAST_AGENTS, MIDEAST_ISSUES, MIDEAST_VALUES, powerset
from oracles import prob_regions as prob_oracle

U, V = tuple(MIDEAST_AGENTS), tuple(MIDEAST_ISSUES)


@pytest.fixture
def relation():
    # f+ restricted to agents with a nonempty image; x4 and x6 only support one issue each
    return CompatibilityRelation.from_mapping(
        U, V,
        {"x1": ["c2", "c3", "c4", "c5"], "x2": ["c1"], "x3": ["c1"], "x4": ["c3"], "x5": ["c1"], "x6": ["c2", "c5"]},
    )


def test_relation_examples(relation):
    c1 = IssueSet.from_ids(V, ["c1"])
    assert apr_lower(relation, c1).ids() == ["x2", "x3", "x5"]
    full, empty = IssueSet.full(V), IssueSet.empty(V)
    assert apr_lower(relation, full).ids() == list(U) == apr_upper(relation, full).ids()
    assert not apr_lower(relation, empty) and not apr_upper(relation, empty)


def test_relation_requires_seriality():
    with pytest.raises(TableError, match="x2"):
        CompatibilityRelation.from_mapping(["x1", "x2"], ["c1"], {"x1": ["c1"]})
    with pytest.raises(TableError, match="c2"):
        CompatibilityRelation.from_mapping(["x1"], ["c1", "c2"], {"x1": ["c1"]})


def test_relation_duality_and_monotonicity(relation):
    subsets = [IssueSet.from_ids(V, s) for s in powerset(V)]
    for X in subsets:
        assert apr_upper(relation, X) == ~apr_lower(relation, ~X)
        assert apr_lower(relation, X) <= apr_upper(relation, X)  # serial relations only
    for X in subsets:
        for Y in subsets:
            if X <= Y:
                assert apr_lower(relation, X) <= apr_lower(relation, Y)
                assert apr_upper(relation, X) <= apr_upper(relation, Y)


def test_apr_f_examples(mideast):
    c1 = mideast.issue_set(["c1"])
    assert apr_f(mideast, "+", "lower", c1).ids() == ["x2", "x3", "x5"]
    assert apr_f(mideast, "-", "lower", c1).ids() == ["x1"]
    assert apr_f(mideast, "+", "upper", c1).ids() == ["x2", "x3", "x5"]


def test_apr_bad_arguments(mideast):
    with pytest.raises(ValueError):
        apr_f(mideast, "+", "middle", mideast.issue_set([]))
    with pytest.raises(KeyError):
        apr_g(mideast, "*", "lower", mideast.agent_set([]))


def test_apr_upper_complement_identity(mideast):
    for sign in "+-":
        for s in powerset(V):
            X = mideast.issue_set(s)
            assert apr_f(mideast, sign, "upper", X) == ~apr_f(mideast, sign, "lower", ~X)
        for s in powerset(U):
            Y = mideast.agent_set(s)
            assert apr_g(mideast, sign, "upper", Y) == ~apr_g(mideast, sign, "lower", ~Y)


def test_smz_bridge(mideast):
    for s in powerset(V):
        X = mideast.issue_set(s)
        expected = apr_f(mideast, "+", "lower", X) - apr_f(mideast, "-", "lower", X)
        assert trisect_agents_smz(mideast, X).pos == expected


def test_equivalence_classes_examples(mideast):
    blocks = equivalence_classes(mideast, mideast.issue_set(["c1"])).blocks
    assert [b.ids() for b in blocks] == [["x1"], ["x2", "x3", "x5"], ["x4", "x6"]]
    assert [b.ids() for b in equivalence_classes(mideast, mideast.issue_set([])).blocks] == [list(U)]
    assert len(equivalence_classes(mideast, mideast.all_issues())) == 6


def test_equivalence_classes_partition_every_b(mideast):
    for s in powerset(V):
        part = equivalence_classes(mideast, mideast.issue_set(s))
        cols = [V.index(c) for c in s]
        for x in U:
            for y in U:
                same = all(MIDEAST_VALUES[U.index(x)][j] == MIDEAST_VALUES[U.index(y)][j] for j in cols)
                assert (y in part.block_of(x)) == same


def test_partition_validation():
    a = AgentSet.from_ids(U, ["x1", "x2"])
    with pytest.raises(PartitionError):
        Partition((a, AgentSet.from_ids(U, ["x2"])), IssueSet.empty(V))
    with pytest.raises(PartitionError):
        Partition((a,), IssueSet.empty(V))


def test_prob_regions_example(mideast):
    t = prob_regions(mideast, mideast.issue_set(["c1"]), mideast.agent_set(["x2", "x3"]), 0.6, 0.3)
    assert t.regions() == {"pos": ["x2", "x3", "x5"], "neg": ["x1", "x4", "x6"], "bnd": []}


def test_prob_regions_trivial_targets(mideast):
    B = mideast.issue_set(["c2", "c4"])
    assert prob_regions(mideast, B, mideast.all_agents(), 0.7, 0.2).pos.ids() == list(U)
    assert prob_regions(mideast, B, mideast.agent_set([]), 0.7, 0.2).neg.ids() == list(U)


def test_prob_regions_boundary_is_inclusive(mideast):
    B = mideast.issue_set(["c1"])
    # block {x2,x3,x5} has P = 2/3 against {x2,x3}
    assert prob_regions(mideast, B, mideast.agent_set(["x2", "x3"]), "2/3", "1/3").region_of("x5") == "pos"
    assert prob_regions(mideast, B, mideast.agent_set(["x2", "x3"]), "3/4", "2/3").region_of("x5") == "neg"
    assert prob_regions(mideast, B, mideast.agent_set(["x2", "x3"]), "3/4", "1/2").region_of("x5") == "bnd"


@pytest.mark.parametrize("alpha, beta", [(0.3, 0.3), (0.2, 0.5), (1.2, 0.1), (0.5, -0.1)])
def test_prob_regions_threshold_order(mideast, alpha, beta):
    with pytest.raises(ThresholdError):
        prob_regions(mideast, mideast.issue_set([]), mideast.agent_set([]), alpha, beta)


def test_prob_regions_against_oracle(mideast):
    for s in powerset(V):
        for x in powerset(U):
            got = prob_regions(mideast, mideast.issue_set(s), mideast.agent_set(x), "3/5", "3/10")
            expected = prob_oracle(MIDEAST_VALUES, list(U), list(V), s, x, "3/5", "3/10")
            assert (set(got.pos), set(got.neg), set(got.bnd)) == expected

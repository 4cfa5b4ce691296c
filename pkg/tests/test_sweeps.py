import numpy as np
import pytest

from triconflict import Family, ModelSpec, SituationTable, TableError, Thresholds, Universe, boolean_pair, degree_pair
from triconflict.engine import trisect
from triconflict.sweeps import SWEEP_CAP, subject_count, sweep

from oracles import MIDEAST_AGENTS, MIDEAST_ISSUES, MIDEAST_VALUES, fqw, powerset, smz, transpose

HALF = Thresholds("1/2", "1/2")


def test_counts(mideast):
    assert len(sweep(mideast, ModelSpec(Family.SMZ, Universe.AGENTS))) == 32
    assert len(sweep(mideast, ModelSpec(Family.SMZ, Universe.ISSUES))) == 64
    assert len(sweep(mideast, ModelSpec(Family.FQW, Universe.AGENTS, thresholds=HALF))) == 31
    assert len(sweep(mideast, ModelSpec(Family.GENERIC, Universe.ISSUES,
                                        evaluations=degree_pair("issues", HALF)))) == 63
    one = SituationTable.from_matrix([[0]])
    assert [t.subject.ids() for t in sweep(one, ModelSpec(Family.SMZ, Universe.AGENTS))] == [[], ["c1"]]
    assert subject_count(5, False) == 32 and subject_count(5, True) == 31


def test_ascending_order_and_oracle(mideast):
    got = sweep(mideast, ModelSpec(Family.SMZ, Universe.AGENTS))
    assert [t.subject.mask for t in got] == list(range(32))
    for t in got:
        assert (set(t.pos), set(t.neg), set(t.bnd)) == smz(MIDEAST_VALUES, MIDEAST_AGENTS, MIDEAST_ISSUES, set(t.subject))
    cols = transpose(MIDEAST_VALUES)
    for t in sweep(mideast, ModelSpec(Family.FQW, Universe.ISSUES, thresholds=HALF)):
        expected = fqw(cols, MIDEAST_ISSUES, MIDEAST_AGENTS, set(t.subject), "1/2", "1/2")
        assert (set(t.pos), set(t.neg), set(t.bnd)) == expected


@pytest.mark.parametrize("universe", ["agents", "issues"])
def test_sweep_equals_single_calls(mideast, universe):
    models = [
        ModelSpec(Family.SMZ, universe),
        ModelSpec(Family.FQW, universe, thresholds=Thresholds("2/5", "1/3")),
        ModelSpec(Family.GENERIC, universe, evaluations=boolean_pair(universe)),
    ]
    for model in models:
        for t in sweep(mideast, model):
            assert t.same_regions(trisect(mideast, model, t.subject))


def test_cap_is_enforced():
    wide = SituationTable.from_matrix(np.zeros((1, SWEEP_CAP + 1), dtype=int))
    with pytest.raises(TableError, match=f"cap is {SWEEP_CAP}"):
        sweep(wide, ModelSpec(Family.SMZ, Universe.AGENTS))

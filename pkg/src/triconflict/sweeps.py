"""Exhaustive enumeration of subjects (all strategies or all agent groups)."""

from __future__ import annotations

from typing import Iterator

from . import kernels
from .engine import perspective, trisect_generic
from .errors import TableError
from .regions import Family, ModelSpec, Trisection
from .situation import SituationTable

# 2**20 subjects is about a million trisections; beyond that a sweep is not a
# desk-scale computation and the report would be unreadable anyway.
SWEEP_CAP = 20


def subject_count(n: int, skip_empty: bool) -> int:
    return (1 << n) - (1 if skip_empty else 0)


def needs_nonempty(model: ModelSpec) -> bool:
    if model.family is Family.FQW:
        return True
    if model.family is Family.GENERIC:
        assert model.evaluations is not None
        return any(ev.needs_nonempty_subject for ev in model.evaluations)
    return False


def check_cap(table: SituationTable, model: ModelSpec) -> int:
    view = perspective(table, model.universe)
    m = len(view.subjects)
    if m > SWEEP_CAP:
        what = "issues" if view.subjects is table.issues else "agents"
        raise TableError(f"cannot sweep 2^{m} subsets of {m} {what}; the sweep cap is {SWEEP_CAP}")
    return m


def sweep_masks(table: SituationTable, model: ModelSpec) -> Iterator[tuple[int, int, int]]:
    """Yield ``(subject_mask, pos_mask, neg_mask)`` in ascending subject order.

    The set-inclusion and degree families run through the sweep kernels; the
    generic family evaluates its pair element by element.
    """
    m = check_cap(table, model)
    view = perspective(table, model.universe)
    start = 1 if needs_nonempty(model) else 0
    if model.family is Family.SMZ:
        pos, neg = kernels.smz_sweep(view.plus, view.minus, m)
    elif model.family is Family.FQW:
        assert model.thresholds is not None
        pos, neg = kernels.fqw_sweep(view.plus, view.minus, m, model.thresholds.alpha, model.thresholds.beta)
    else:
        assert model.evaluations is not None
        for s in range(start, 1 << m):
            t = trisect_generic(table, model.universe, view.subject(s), *model.evaluations)
            yield s, t.pos.mask, t.neg.mask
        return
    for s in range(start, 1 << m):
        yield s, int(pos[s]), int(neg[s])


def sweep(table: SituationTable, model: ModelSpec) -> list[Trisection]:
    """One validated trisection per subject, in ascending bitmask order."""
    view = perspective(table, model.universe)
    return [
        Trisection.from_masks(view.element_type, view.elements, p, n, view.universe, model, view.subject(s))
        for s, p, n in sweep_masks(table, model)
    ]

"""One trisection engine for both universes.

A :class:`Perspective` is a view of a situation table from one universe: the
elements being divided, the universe the subject is drawn from, and the
favourable/opposing image of each element as a bit mask over the subject
universe.  Dividing agents uses the row view (``f+``/``f-``); dividing issues
uses the column view (``g+``/``g-``).  Everything below is written once
against a perspective.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import EvaluationError, UniverseMismatchError
from .evaluation import Evaluation, Thresholds, boolean_pair, degree_pair
from .regions import Family, ModelSpec, SplitKind, Trisection, TwoWaySplit
from .rough import apr_f, apr_g
from .sets import AgentSet, ElementSet, IssueSet, Universe, popcount
from .situation import SituationTable


@dataclass(frozen=True)
class Perspective:
    universe: Universe
    elements: tuple[str, ...]
    subjects: tuple[str, ...]
    plus: tuple[int, ...]
    minus: tuple[int, ...]
    element_type: type[ElementSet]
    subject_type: type[ElementSet]

    @property
    def full(self) -> int:
        return (1 << len(self.elements)) - 1

    @property
    def subject_full(self) -> int:
        return (1 << len(self.subjects)) - 1

    def subject(self, mask: int) -> ElementSet:
        return self.subject_type(self.subjects, mask)

    def check_subject(self, subject: ElementSet) -> int:
        if type(subject) is not self.subject_type or subject.universe != self.subjects:
            want = "IssueSet (strategy)" if self.universe is Universe.AGENTS else "AgentSet (agent group)"
            raise UniverseMismatchError(f"dividing {self.universe} requires a subject of type {want}")
        return subject.mask


def perspective(table: SituationTable, universe: Universe | str) -> Perspective:
    universe = Universe(universe)
    if universe is Universe.AGENTS:
        return Perspective(universe, table.agents, table.issues, table.f_plus_masks, table.f_minus_masks,
                           AgentSet, IssueSet)
    return Perspective(universe, table.issues, table.agents, table.g_plus_masks, table.g_minus_masks,
                       IssueSet, AgentSet)


def _region(view: Perspective, table: SituationTable, subject: ElementSet, evaluation: Evaluation) -> int:
    if evaluation.universe is not view.universe:
        raise UniverseMismatchError(f"evaluation {evaluation.name} is defined on {evaluation.universe}")
    mask = 0
    for i, element in enumerate(view.elements):
        if evaluation.designated(table, element, subject):
            mask |= 1 << i
    return mask


def two_way(
    table: SituationTable, universe: Universe | str, subject: ElementSet, evaluation: Evaluation, kind: SplitKind | str
) -> TwoWaySplit:
    """Split a universe by whether ``evaluation`` lands in its designated set."""
    view = perspective(table, universe)
    view.check_subject(subject)
    inside = _region(view, table, subject, evaluation)
    return TwoWaySplit(
        view.element_type(view.elements, inside),
        view.element_type(view.elements, view.full & ~inside),
        SplitKind(kind),
        view.universe,
        subject,
    )


def trisect_generic(
    table: SituationTable, universe: Universe | str, subject: ElementSet, accept: Evaluation, reject: Evaluation
) -> Trisection:
    """Trisect with an arbitrary (acceptance, rejection) evaluation pair.

    POS: accepted and not rejected. NEG: rejected and not accepted. BND: the
    rest. Degree evaluations propagate their error on an empty subject.
    """
    view = perspective(table, universe)
    view.check_subject(subject)
    model = ModelSpec(Family.GENERIC, view.universe, evaluations=(accept, reject))
    a = _region(view, table, subject, accept)
    r = _region(view, table, subject, reject)
    return Trisection.from_masks(view.element_type, view.elements, a & ~r, r & ~a, view.universe, model, subject)


def trisect_smz(table: SituationTable, universe: Universe | str, subject: ElementSet) -> Trisection:
    """Set-inclusion trisection, computed as differences of lower approximations.

    POS = lower+(S) - lower-(S), NEG = lower-(S) - lower+(S), BND = the rest.
    The empty subject is allowed.
    """
    view = perspective(table, universe)
    view.check_subject(subject)
    if view.universe is Universe.AGENTS:
        low_plus, low_minus = apr_f(table, "+", "lower", subject), apr_f(table, "-", "lower", subject)
    else:
        low_plus, low_minus = apr_g(table, "+", "lower", subject), apr_g(table, "-", "lower", subject)
    pos = low_plus - low_minus
    neg = low_minus - low_plus
    bnd = ~(pos | neg)
    return Trisection(pos, neg, bnd, view.universe, ModelSpec(Family.SMZ, view.universe), subject)


def degrees(view: Perspective, subject_mask: int) -> list[tuple[Fraction, Fraction]]:
    """(acceptance, rejection) inclusion degrees of every element."""
    size = popcount(subject_mask)
    if size == 0:
        what = "strategy" if view.universe is Universe.AGENTS else "agent group"
        raise EvaluationError(f"inclusion degree is undefined for an empty {what}")
    return [
        (Fraction(popcount(p & subject_mask), size), Fraction(popcount(m & subject_mask), size))
        for p, m in zip(view.plus, view.minus)
    ]


def trisect_fqw(
    table: SituationTable, universe: Universe | str, subject: ElementSet, thresholds: Thresholds
) -> Trisection:
    """Inclusion-degree trisection with designated intervals ``(alpha, 1]`` and ``(beta, 1]``.

    POS: acceptance degree > alpha and rejection degree <= beta; NEG the
    mirror; BND the rest. The subject must be nonempty.
    """
    view = perspective(table, universe)
    s = view.check_subject(subject)
    pos = neg = 0
    for i, (acc, rej) in enumerate(degrees(view, s)):
        accepted = acc > thresholds.alpha
        rejected = rej > thresholds.beta
        if accepted and not rejected:
            pos |= 1 << i
        elif rejected and not accepted:
            neg |= 1 << i
    model = ModelSpec(Family.FQW, view.universe, thresholds=thresholds)
    return Trisection.from_masks(view.element_type, view.elements, pos, neg, view.universe, model, subject)


def trisect(table: SituationTable, model: ModelSpec, subject: ElementSet) -> Trisection:
    """Dispatch on ``model.family``."""
    if model.family is Family.SMZ:
        return trisect_smz(table, model.universe, subject)
    if model.family is Family.FQW:
        assert model.thresholds is not None
        return trisect_fqw(table, model.universe, subject, model.thresholds)
    assert model.evaluations is not None
    return trisect_generic(table, model.universe, subject, *model.evaluations)


def evaluation_matrix(table: SituationTable, model: ModelSpec, subject: ElementSet) -> dict[str, dict]:
    """Per-element acceptance/rejection values for reports (exact, as strings)."""
    if model.family is Family.GENERIC:
        assert model.evaluations is not None
        acc, rej = model.evaluations
    elif model.family is Family.FQW:
        assert model.thresholds is not None
        acc, rej = degree_pair(model.universe, model.thresholds)
    else:
        acc, rej = boolean_pair(model.universe)
    view = perspective(table, model.universe)
    out = {}
    for element in view.elements:
        a, r = acc(table, element, subject), rej(table, element, subject)
        out[element] = {
            "acceptance": _render(a),
            "rejection": _render(r),
            "accepted": acc.scale.is_designated(a),
            "rejected": rej.scale.is_designated(r),
        }
    return out


def _render(value) -> str:
    if isinstance(value, bool):
        return "T" if value else "F"
    return str(value)

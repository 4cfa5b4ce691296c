"""Evaluation scales and the concrete acceptance/rejection evaluations.

Two scales ship: the Boolean scale ``F <= T`` with designated set ``{T}``, and
the unit interval with a half-open designated set ``(t, 1]``.  Degrees are
``fractions.Fraction`` values so that threshold tests are exact.

Rejection evaluations on the Boolean scale default to the inclusion reading
``f-(x) <= X`` (``g-(c) <= Y``), which is the one that reproduces the
set-inclusion conflict model.  The complement reading ``f-(x) <= X^C`` is
available with ``printed_rejection=True`` for comparison only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Callable, Union

from .errors import EvaluationError, ThresholdError, UniverseMismatchError
from .sets import AgentSet, ElementSet, IssueSet, Universe, popcount
from .situation import SituationTable

EvaluationValue = Union[bool, Fraction]

__all__ = [
    "EvaluationValue",
    "EvaluationScale",
    "BooleanScale",
    "IntervalScale",
    "BOOLEAN",
    "Thresholds",
    "to_fraction",
    "is_designated",
    "Evaluation",
    "nu_a",
    "nu_r",
    "mu_a",
    "mu_r",
    "omega_a",
    "omega_r",
    "psi_a",
    "psi_r",
    "boolean_pair",
    "degree_pair",
]


def to_fraction(value: object) -> Fraction:
    """Convert a threshold or degree to an exact rational.

    Floats and strings are read as the decimal they print as, so ``0.6``
    becomes ``3/5`` rather than the nearest binary double.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not numeric evaluation values")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, Rational):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(repr(value))
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise ThresholdError(f"not a number: {value!r}") from None
    raise TypeError(f"cannot interpret {value!r} as a rational number")


class EvaluationScale:
    """A poset of evaluation values with an upward-closed designated subset."""

    name: str = "scale"

    def in_carrier(self, value: object) -> bool:
        raise NotImplementedError

    def leq(self, v: EvaluationValue, w: EvaluationValue) -> bool:
        raise NotImplementedError

    def designated(self, value: EvaluationValue) -> bool:
        raise NotImplementedError

    def is_designated(self, value: object) -> bool:
        if not self.in_carrier(value):
            raise EvaluationError(f"value {value!r} does not belong to the {self.name} scale")
        return self.designated(value)  # type: ignore[arg-type]


@dataclass(frozen=True)
class BooleanScale(EvaluationScale):
    """``{F, T}`` ordered ``F <= T``; ``T`` is designated."""

    name = "Boolean"

    def in_carrier(self, value: object) -> bool:
        return isinstance(value, bool)

    def leq(self, v: EvaluationValue, w: EvaluationValue) -> bool:
        return (not v) or bool(w)

    def designated(self, value: EvaluationValue) -> bool:
        return value is True

    def __str__(self) -> str:
        return "{T}"


BOOLEAN = BooleanScale()


@dataclass(frozen=True)
class IntervalScale(EvaluationScale):
    """The unit interval with designated values ``(threshold, 1]``."""

    threshold: Fraction = Fraction(1, 2)
    name = "unit-interval"

    def __post_init__(self) -> None:
        t = to_fraction(self.threshold)
        if not 0 <= t < 1:
            raise ThresholdError(f"threshold {t} must satisfy 0 <= t < 1")
        object.__setattr__(self, "threshold", t)

    def in_carrier(self, value: object) -> bool:
        if isinstance(value, bool) or not isinstance(value, (Rational, float)):
            return False
        return 0 <= to_fraction(value) <= 1

    def leq(self, v: EvaluationValue, w: EvaluationValue) -> bool:
        return to_fraction(v) <= to_fraction(w)

    def designated(self, value: EvaluationValue) -> bool:
        # strict: the threshold itself is not designated
        return to_fraction(value) > self.threshold

    def __str__(self) -> str:
        return f"({self.threshold}, 1]"


def is_designated(value: object, scale: EvaluationScale) -> bool:
    """Whether ``value`` lies in the designated subset of ``scale``.

    Raises :class:`EvaluationError` when the value is not on the scale, e.g. a
    Boolean verdict tested against a unit-interval scale.
    """
    return scale.is_designated(value)


@dataclass(frozen=True)
class Thresholds:
    """Acceptance threshold ``alpha`` and rejection threshold ``beta``.

    Both lie in ``[0, 1)``; no order between them is imposed.
    """

    alpha: Fraction
    beta: Fraction

    def __post_init__(self) -> None:
        for name in ("alpha", "beta"):
            v = to_fraction(getattr(self, name))
            if not 0 <= v < 1:
                raise ThresholdError(f"{name} = {v} must satisfy 0 <= {name} < 1")
            object.__setattr__(self, name, v)

    @property
    def accept_scale(self) -> IntervalScale:
        return IntervalScale(self.alpha)

    @property
    def reject_scale(self) -> IntervalScale:
        return IntervalScale(self.beta)


# -- concrete evaluations ------------------------------------------------------

def _issue_subject(table: SituationTable, X: ElementSet) -> int:
    if not isinstance(X, IssueSet) or X.universe != table.issues:
        raise UniverseMismatchError("a strategy must be an IssueSet over the table's issues")
    return X.mask


def _agent_subject(table: SituationTable, Y: ElementSet) -> int:
    if not isinstance(Y, AgentSet) or Y.universe != table.agents:
        raise UniverseMismatchError("an agent group must be an AgentSet over the table's agents")
    return Y.mask


def _degree(image: int, subject: int, what: str) -> Fraction:
    size = popcount(subject)
    if size == 0:
        raise EvaluationError(f"inclusion degree is undefined for an empty {what}")
    return Fraction(popcount(image & subject), size)


def nu_a(table: SituationTable, agent: str, X: IssueSet) -> bool:
    """T iff every issue the agent supports lies in the strategy."""
    x = _issue_subject(table, X)
    return table.f_plus_masks[table.agent_index(agent)] & ~x == 0


def nu_r(table: SituationTable, agent: str, X: IssueSet, printed_rejection: bool = False) -> bool:
    """T iff every issue the agent opposes lies in the strategy.

    With ``printed_rejection`` the test is against the complement of the
    strategy instead.
    """
    x = _issue_subject(table, X)
    if printed_rejection:
        x = (1 << len(table.issues)) - 1 & ~x
    return table.f_minus_masks[table.agent_index(agent)] & ~x == 0


def mu_a(table: SituationTable, agent: str, X: IssueSet) -> Fraction:
    return _degree(table.f_plus_masks[table.agent_index(agent)], _issue_subject(table, X), "strategy")


def mu_r(table: SituationTable, agent: str, X: IssueSet) -> Fraction:
    return _degree(table.f_minus_masks[table.agent_index(agent)], _issue_subject(table, X), "strategy")


def omega_a(table: SituationTable, issue: str, Y: AgentSet) -> bool:
    """T iff every supporter of the issue belongs to the group."""
    y = _agent_subject(table, Y)
    return table.g_plus_masks[table.issue_index(issue)] & ~y == 0


def omega_r(table: SituationTable, issue: str, Y: AgentSet, printed_rejection: bool = False) -> bool:
    y = _agent_subject(table, Y)
    if printed_rejection:
        y = (1 << len(table.agents)) - 1 & ~y
    return table.g_minus_masks[table.issue_index(issue)] & ~y == 0


def psi_a(table: SituationTable, issue: str, Y: AgentSet) -> Fraction:
    """Share of the group supporting the issue."""
    return _degree(table.g_plus_masks[table.issue_index(issue)], _agent_subject(table, Y), "agent group")


def psi_r(table: SituationTable, issue: str, Y: AgentSet) -> Fraction:
    """Share of the group opposing the issue."""
    return _degree(table.g_minus_masks[table.issue_index(issue)], _agent_subject(table, Y), "agent group")


# -- evaluation objects for the generic model -----------------------------------

@dataclass(frozen=True)
class Evaluation:
    """An evaluation function on one universe together with its scale."""

    name: str
    universe: Universe
    func: Callable[[SituationTable, str, ElementSet], EvaluationValue]
    scale: EvaluationScale

    def __call__(self, table: SituationTable, element: str, subject: ElementSet) -> EvaluationValue:
        return self.func(table, element, subject)

    def designated(self, table: SituationTable, element: str, subject: ElementSet) -> bool:
        return self.scale.is_designated(self.func(table, element, subject))

    @property
    def needs_nonempty_subject(self) -> bool:
        return isinstance(self.scale, IntervalScale)


def _printed(func: Callable) -> Callable:
    def wrapped(table: SituationTable, element: str, subject: ElementSet) -> bool:
        return func(table, element, subject, printed_rejection=True)

    wrapped.__name__ = func.__name__ + "_printed"
    return wrapped


def boolean_pair(universe: Universe | str, printed_rejection: bool = False) -> tuple[Evaluation, Evaluation]:
    """The inclusion-based (acceptance, rejection) pair on the Boolean scale."""
    universe = Universe(universe)
    if universe is Universe.AGENTS:
        acc, rej = nu_a, nu_r
    else:
        acc, rej = omega_a, omega_r
    if printed_rejection:
        rej = _printed(rej)
    return (
        Evaluation(acc.__name__, universe, acc, BOOLEAN),
        Evaluation(rej.__name__, universe, rej, BOOLEAN),
    )


def degree_pair(universe: Universe | str, thresholds: Thresholds) -> tuple[Evaluation, Evaluation]:
    """The inclusion-degree pair with designated sets ``(alpha, 1]`` and ``(beta, 1]``."""
    universe = Universe(universe)
    acc, rej = (mu_a, mu_r) if universe is Universe.AGENTS else (psi_a, psi_r)
    return (
        Evaluation(acc.__name__, universe, acc, thresholds.accept_scale),
        Evaluation(rej.__name__, universe, rej, thresholds.reject_scale),
    )

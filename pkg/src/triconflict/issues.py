"""Trisecting the universe of issues with respect to an agent group.

Mirror of :mod:`triconflict.agents`; both delegate to :mod:`triconflict.engine`.
"""

from __future__ import annotations

from .engine import trisect_fqw, trisect_generic, trisect_smz, two_way
from .evaluation import Evaluation, Thresholds
from .regions import SplitKind, Trisection, TwoWaySplit, compose_three_way
from .sets import AgentSet, Universe
from .situation import SituationTable

__all__ = [
    "trisect_issues_generic",
    "trisect_issues_smz",
    "trisect_issues_fqw",
    "two_way_accept_issues",
    "two_way_reject_issues",
    "compose_three_way",
]


def trisect_issues_generic(
    table: SituationTable, Y: AgentSet, accept: Evaluation, reject: Evaluation
) -> Trisection:
    return trisect_generic(table, Universe.ISSUES, Y, accept, reject)


def trisect_issues_smz(table: SituationTable, Y: AgentSet) -> Trisection:
    return trisect_smz(table, Universe.ISSUES, Y)


def trisect_issues_fqw(table: SituationTable, Y: AgentSet, t: Thresholds) -> Trisection:
    """(alpha, beta)-agreement/disagreement/neutral issues; ``Y`` must be nonempty."""
    return trisect_fqw(table, Universe.ISSUES, Y, t)


def two_way_accept_issues(table: SituationTable, Y: AgentSet, accept: Evaluation) -> TwoWaySplit:
    return two_way(table, Universe.ISSUES, Y, accept, SplitKind.ACCEPTANCE)


def two_way_reject_issues(table: SituationTable, Y: AgentSet, reject: Evaluation) -> TwoWaySplit:
    return two_way(table, Universe.ISSUES, Y, reject, SplitKind.REJECTION)

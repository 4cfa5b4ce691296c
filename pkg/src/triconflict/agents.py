"""Trisecting the universe of agents with respect to a strategy."""

from __future__ import annotations

from .engine import trisect_fqw, trisect_generic, trisect_smz, two_way
from .evaluation import Evaluation, Thresholds
from .regions import SplitKind, Trisection, TwoWaySplit, compose_three_way
from .sets import IssueSet, Universe
from .situation import SituationTable

__all__ = [
    "trisect_agents_generic",
    "trisect_agents_smz",
    "trisect_agents_fqw",
    "two_way_accept_agents",
    "two_way_reject_agents",
    "compose_three_way",
]


def trisect_agents_generic(
    table: SituationTable, X: IssueSet, accept: Evaluation, reject: Evaluation
) -> Trisection:
    return trisect_generic(table, Universe.AGENTS, X, accept, reject)


def trisect_agents_smz(table: SituationTable, X: IssueSet) -> Trisection:
    """Agreement/disagreement/neutral agents under the set-inclusion model."""
    return trisect_smz(table, Universe.AGENTS, X)


def trisect_agents_fqw(table: SituationTable, X: IssueSet, t: Thresholds) -> Trisection:
    """(alpha, beta)-agreement/disagreement/neutral agents; ``X`` must be nonempty."""
    return trisect_fqw(table, Universe.AGENTS, X, t)


def two_way_accept_agents(table: SituationTable, X: IssueSet, accept: Evaluation) -> TwoWaySplit:
    return two_way(table, Universe.AGENTS, X, accept, SplitKind.ACCEPTANCE)


def two_way_reject_agents(table: SituationTable, X: IssueSet, reject: Evaluation) -> TwoWaySplit:
    return two_way(table, Universe.AGENTS, X, reject, SplitKind.REJECTION)

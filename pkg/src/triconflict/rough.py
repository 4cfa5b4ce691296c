"""Rough approximations over two universes and probabilistic three regions."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import PartitionError, TableError, ThresholdError
from .evaluation import to_fraction
from .regions import Trisection
from .sets import AgentSet, IssueSet, Universe, iter_bits, popcount
from .situation import SituationTable

__all__ = [
    "CompatibilityRelation",
    "apr_lower",
    "apr_upper",
    "apr_f",
    "apr_g",
    "Partition",
    "equivalence_classes",
    "prob_regions",
]


@dataclass(frozen=True)
class CompatibilityRelation:
    """A serial set-valued map from agents to nonempty sets of issues."""

    agents: tuple[str, ...]
    issues: tuple[str, ...]
    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.images) != len(self.agents):
            raise TableError("relation needs one image per agent")
        covered = 0
        for agent, image in zip(self.agents, self.images):
            if image == 0:
                raise TableError(f"relation is not serial: {agent!r} is related to no issue")
            covered |= image
        missing = ((1 << len(self.issues)) - 1) & ~covered
        if missing:
            name = self.issues[next(iter_bits(missing))]
            raise TableError(f"relation is not serial: no agent is related to {name!r}")

    @classmethod
    def from_mapping(
        cls, agents: Iterable[str], issues: Iterable[str], related: Mapping[str, Iterable[str]]
    ) -> CompatibilityRelation:
        agents, issues = tuple(agents), tuple(issues)
        return cls(agents, issues, tuple(IssueSet.from_ids(issues, related.get(a, ())).mask for a in agents))

    def image(self, agent: str) -> IssueSet:
        return IssueSet(self.issues, self.images[self.agents.index(agent)])


def _lower_mask(images: Iterable[int], subject: int) -> int:
    out = 0
    for i, image in enumerate(images):
        if image & ~subject == 0:
            out |= 1 << i
    return out


def _upper_mask(images: Iterable[int], subject: int) -> int:
    out = 0
    for i, image in enumerate(images):
        if image & subject:
            out |= 1 << i
    return out


def apr_lower(R: CompatibilityRelation, X: IssueSet) -> AgentSet:
    """Agents related only to issues inside ``X``."""
    return AgentSet(R.agents, _lower_mask(R.images, X.mask))


def apr_upper(R: CompatibilityRelation, X: IssueSet) -> AgentSet:
    """Agents related to at least one issue in ``X``."""
    return AgentSet(R.agents, _upper_mask(R.images, X.mask))


def _pick(kind: str, images: tuple[int, ...], subject: int) -> int:
    if kind == "lower":
        return _lower_mask(images, subject)
    if kind == "upper":
        return _upper_mask(images, subject)
    raise ValueError(f"kind must be 'lower' or 'upper', not {kind!r}")


def apr_f(table: SituationTable, sign: str, kind: str, X: IssueSet) -> AgentSet:
    """Approximate a strategy through ``f+`` (``sign='+'``) or ``f-`` (``'-'``).

    Unlike :func:`apr_lower`, empty images are allowed here.
    """
    images = {"+": table.f_plus_masks, "-": table.f_minus_masks}[sign]
    return AgentSet(table.agents, _pick(kind, images, X.mask))


def apr_g(table: SituationTable, sign: str, kind: str, Y: AgentSet) -> IssueSet:
    """Approximate an agent group through ``g+`` or ``g-``."""
    images = {"+": table.g_plus_masks, "-": table.g_minus_masks}[sign]
    return IssueSet(table.issues, _pick(kind, images, Y.mask))


@dataclass(frozen=True)
class Partition:
    """Blocks of agents that agree on every issue of ``attributes``."""

    blocks: tuple[AgentSet, ...]
    attributes: IssueSet

    def __post_init__(self) -> None:
        seen = 0
        for block in self.blocks:
            if not block:
                raise PartitionError("empty block")
            if block.mask & seen:
                raise PartitionError("blocks overlap")
            seen |= block.mask
        if self.blocks and seen != self.blocks[0].full_mask:
            raise PartitionError("blocks do not cover the universe")

    def block_of(self, agent: str) -> AgentSet:
        for block in self.blocks:
            if agent in block:
                return block
        raise KeyError(agent)

    def __len__(self) -> int:
        return len(self.blocks)


def equivalence_classes(table: SituationTable, B: IssueSet) -> Partition:
    """Partition agents by their values on the issues in ``B``.

    Blocks are listed in order of their first member.
    """
    cols = list(iter_bits(B.mask))
    groups: dict[tuple, int] = {}
    for i, row in enumerate(table.values):
        key = tuple(row[j] for j in cols)
        groups[key] = groups.get(key, 0) | 1 << i
    return Partition(tuple(AgentSet(table.agents, m) for m in groups.values()), B)


def prob_regions(table: SituationTable, B: IssueSet, X: AgentSet, alpha, beta) -> Trisection:
    """Probabilistic positive/boundary/negative regions of an agent set.

    ``P(X | [x]) = |[x] & X| / |[x]|`` is compared exactly: ``P >= alpha``
    goes to POS, ``P <= beta`` to NEG, anything strictly between to BND.
    Requires ``0 <= beta < alpha <= 1``.
    """
    a, b = to_fraction(alpha), to_fraction(beta)
    if not 0 <= b < a <= 1:
        raise ThresholdError(f"probabilistic regions need 0 <= beta < alpha <= 1, got alpha={a}, beta={b}")
    pos = neg = 0
    for block in equivalence_classes(table, B).blocks:
        p = Fraction(popcount(block.mask & X.mask), len(block))
        if p >= a:
            pos |= block.mask
        elif p <= b:
            neg |= block.mask
    return Trisection.from_masks(AgentSet, table.agents, pos, neg, Universe.AGENTS, subject=X)

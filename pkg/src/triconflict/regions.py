"""Trisections, two-way splits and model descriptors."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .errors import PartitionError, UniverseMismatchError
from .evaluation import Evaluation, Thresholds
from .sets import ElementSet, Universe

__all__ = [
    "Family",
    "ModelSpec",
    "Trisection",
    "TwoWaySplit",
    "SplitKind",
    "partition_violations",
    "compose_three_way",
]


class Family(str, enum.Enum):
    GENERIC = "generic"
    SMZ = "smz"
    FQW = "fqw"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class ModelSpec:
    """Which conflict model produced a trisection, with its parameters.

    ``thresholds`` is required for the degree-based family and forbidden for
    the set-inclusion family; ``evaluations`` (an acceptance/rejection pair)
    is required for the generic family only.
    """

    family: Family
    universe: Universe
    thresholds: Optional[Thresholds] = None
    evaluations: Optional[tuple[Evaluation, Evaluation]] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "family", Family(self.family))
        object.__setattr__(self, "universe", Universe(self.universe))
        if self.family is Family.FQW and self.thresholds is None:
            raise ValueError("the fqw model needs thresholds")
        if self.family is Family.SMZ and self.thresholds is not None:
            raise ValueError("the smz model takes no thresholds")
        if self.family is Family.GENERIC:
            if self.evaluations is None or len(self.evaluations) != 2:
                raise ValueError("the generic model needs an (acceptance, rejection) evaluation pair")
            for ev in self.evaluations:
                if ev.universe is not self.universe:
                    raise UniverseMismatchError(f"evaluation {ev.name} is defined on {ev.universe}, not {self.universe}")
        elif self.evaluations is not None:
            raise ValueError(f"the {self.family} model fixes its own evaluations")

    def describe(self) -> dict:
        out: dict = {"family": str(self.family), "universe": str(self.universe)}
        if self.thresholds is not None:
            out["alpha"] = str(self.thresholds.alpha)
            out["beta"] = str(self.thresholds.beta)
        if self.evaluations is not None:
            acc, rej = self.evaluations
            out["acceptance"] = {"evaluation": acc.name, "designated": str(acc.scale)}
            out["rejection"] = {"evaluation": rej.name, "designated": str(rej.scale)}
        return out


def partition_violations(pos: int, neg: int, bnd: int, full: int) -> list[str]:
    """Describe every way three masks fail to partition ``full``; empty if they do."""
    problems = []
    if pos & neg:
        problems.append(f"POS and NEG overlap ({pos & neg:#x})")
    if pos & bnd:
        problems.append(f"POS and BND overlap ({pos & bnd:#x})")
    if neg & bnd:
        problems.append(f"NEG and BND overlap ({neg & bnd:#x})")
    union = pos | neg | bnd
    if union & ~full:
        problems.append(f"regions leave the universe ({union & ~full:#x})")
    if full & ~union:
        problems.append(f"regions miss elements ({full & ~union:#x})")
    return problems


@dataclass(frozen=True)
class Trisection:
    """POS/NEG/BND regions of one universe; construction checks the partition."""

    pos: ElementSet
    neg: ElementSet
    bnd: ElementSet
    universe: Universe
    model: Optional[ModelSpec] = None
    subject: Optional[ElementSet] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "universe", Universe(self.universe))
        self.validate()

    def validate(self) -> None:
        u = self.pos.universe
        if self.neg.universe != u or self.bnd.universe != u or not (
            type(self.pos) is type(self.neg) is type(self.bnd)
        ):
            raise PartitionError("regions are drawn from different universes")
        if self.pos.kind != self.universe.value:
            raise PartitionError(f"regions hold {self.pos.kind} but the trisection divides {self.universe}")
        problems = partition_violations(self.pos.mask, self.neg.mask, self.bnd.mask, self.pos.full_mask)
        if problems:
            raise PartitionError("; ".join(problems))

    @classmethod
    def from_masks(
        cls,
        set_type: type[ElementSet],
        elements: tuple[str, ...],
        pos: int,
        neg: int,
        universe: Universe,
        model: Optional[ModelSpec] = None,
        subject: Optional[ElementSet] = None,
        bnd: Optional[int] = None,
    ) -> Trisection:
        full = (1 << len(elements)) - 1
        if bnd is None:
            bnd = full & ~(pos | neg)
        return cls(set_type(elements, pos), set_type(elements, neg), set_type(elements, bnd), universe, model, subject)

    def regions(self) -> dict[str, list[str]]:
        return {"pos": self.pos.ids(), "neg": self.neg.ids(), "bnd": self.bnd.ids()}

    def masks(self) -> tuple[int, int, int]:
        return self.pos.mask, self.neg.mask, self.bnd.mask

    def region_of(self, element: str) -> str:
        for name, region in (("pos", self.pos), ("neg", self.neg), ("bnd", self.bnd)):
            if element in region:
                return name
        raise KeyError(element)

    def same_regions(self, other: Trisection) -> bool:
        return self.masks() == other.masks() and self.pos.universe == other.pos.universe


class SplitKind(str, enum.Enum):
    ACCEPTANCE = "acceptance"
    REJECTION = "rejection"


@dataclass(frozen=True)
class TwoWaySplit:
    """An acceptance (or rejection) region and its complement."""

    in_region: ElementSet
    out_region: ElementSet
    kind: SplitKind
    universe: Universe
    subject: Optional[ElementSet] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", SplitKind(self.kind))
        object.__setattr__(self, "universe", Universe(self.universe))
        if not self.in_region.isdisjoint(self.out_region):
            raise PartitionError("two-way split regions overlap")
        if (self.in_region | self.out_region).mask != self.in_region.full_mask:
            raise PartitionError("two-way split regions do not cover the universe")


def compose_three_way(accept: TwoWaySplit, reject: TwoWaySplit, model: Optional[ModelSpec] = None) -> Trisection:
    """Combine an acceptance split and a rejection split into a trisection.

    Acceptance without rejection is POS, rejection without acceptance is NEG,
    and both-or-neither is BND.
    """
    if accept.kind is not SplitKind.ACCEPTANCE or reject.kind is not SplitKind.REJECTION:
        raise ValueError("compose_three_way expects an acceptance split and a rejection split")
    if accept.universe is not reject.universe or accept.in_region.universe != reject.in_region.universe:
        raise UniverseMismatchError("splits are over different universes")
    if accept.subject != reject.subject:
        raise UniverseMismatchError("splits were computed against different subjects")
    a_in, a_out = accept.in_region, accept.out_region
    r_in, r_out = reject.in_region, reject.out_region
    return Trisection(
        pos=a_in & r_out,
        neg=a_out & r_in,
        bnd=(a_in & r_in) | (a_out & r_out),
        universe=accept.universe,
        model=model,
        subject=accept.subject,
    )

"""Bit-vector subsets of the two universes.

An :class:`ElementSet` stores membership as a Python ``int`` whose bit ``i``
corresponds to position ``i`` of its universe.  Python integers have no fixed
width, so universes wider than 64 elements work unchanged; only the sweep
kernels in :mod:`triconflict.kernels` are restricted to 64-bit words.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import ClassVar, Iterable, Iterator, TypeVar

from .errors import UniverseMismatchError, UnknownElementError

S = TypeVar("S", bound="ElementSet")


def popcount(mask: int) -> int:
    return mask.bit_count()


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class ElementSet:
    """An immutable subset of an ordered universe of identifiers."""

    universe: tuple[str, ...]
    mask: int = 0

    kind: ClassVar[str] = "elements"

    def __post_init__(self) -> None:
        if self.mask < 0 or self.mask >> len(self.universe):
            raise ValueError(
                f"mask {self.mask:#x} has bits outside a universe of size {len(self.universe)}"
            )

    # -- construction -----------------------------------------------------
    @classmethod
    def from_ids(cls: type[S], universe: tuple[str, ...], ids: Iterable[str]) -> S:
        index = {name: i for i, name in enumerate(universe)}
        mask = 0
        for name in ids:
            try:
                mask |= 1 << index[name]
            except KeyError:
                raise UnknownElementError(f"unknown {cls.kind[:-1]} identifier {name!r}") from None
        return cls(universe, mask)

    @classmethod
    def empty(cls: type[S], universe: tuple[str, ...]) -> S:
        return cls(universe, 0)

    @classmethod
    def full(cls: type[S], universe: tuple[str, ...]) -> S:
        return cls(universe, (1 << len(universe)) - 1)

    # -- views ------------------------------------------------------------
    @property
    def full_mask(self) -> int:
        return (1 << len(self.universe)) - 1

    def ids(self) -> list[str]:
        return [self.universe[i] for i in iter_bits(self.mask)]

    def __iter__(self) -> Iterator[str]:
        return iter(self.ids())

    def __len__(self) -> int:
        return popcount(self.mask)

    def __bool__(self) -> bool:
        return self.mask != 0

    def __contains__(self, name: object) -> bool:
        try:
            i = self.universe.index(name)  # type: ignore[arg-type]
        except ValueError:
            return False
        return bool(self.mask >> i & 1)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({{{', '.join(self.ids())}}})"

    # -- algebra ----------------------------------------------------------
    def _check(self, other: ElementSet) -> None:
        if type(other) is not type(self) or other.universe != self.universe:
            raise UniverseMismatchError(
                f"cannot combine {type(self).__name__} and {type(other).__name__} over different universes"
            )

    def _new(self: S, mask: int) -> S:
        return type(self)(self.universe, mask)

    def __or__(self: S, other: S) -> S:
        self._check(other)
        return self._new(self.mask | other.mask)

    def __and__(self: S, other: S) -> S:
        self._check(other)
        return self._new(self.mask & other.mask)

    def __sub__(self: S, other: S) -> S:
        self._check(other)
        return self._new(self.mask & ~other.mask)

    def __xor__(self: S, other: S) -> S:
        self._check(other)
        return self._new(self.mask ^ other.mask)

    def __invert__(self: S) -> S:
        return self._new(self.full_mask & ~self.mask)

    complement = __invert__

    def __le__(self, other: ElementSet) -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    def __ge__(self, other: ElementSet) -> bool:
        return other <= self

    def __lt__(self, other: ElementSet) -> bool:
        return self <= other and self.mask != other.mask

    def __gt__(self, other: ElementSet) -> bool:
        return other < self

    issubset = __le__
    issuperset = __ge__

    def isdisjoint(self, other: ElementSet) -> bool:
        self._check(other)
        return self.mask & other.mask == 0


class AgentSet(ElementSet):
    """A subset of the agent universe (an agent group)."""

    kind = "agents"


class IssueSet(ElementSet):
    """A subset of the issue universe (a strategy)."""

    kind = "issues"


class Universe(str, enum.Enum):
    """Which universe a trisection divides."""

    AGENTS = "agents"
    ISSUES = "issues"

    def __str__(self) -> str:
        return self.value

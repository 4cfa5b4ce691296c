"""Situation tables: agents x issues with attitudes in {+1, 0, -1}.

The favourable/opposing images of every row (``f_plus``/``f_minus``, subsets
of issues) and every column (``g_plus``/``g_minus``, subsets of agents) are
computed once at construction and stored as integer bit masks.
"""

from __future__ import annotations

import csv
import enum
import hashlib
import io
import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import TableError, UnknownElementError
from .sets import AgentSet, IssueSet

__all__ = [
    "Attitude",
    "SituationTable",
    "parse_table",
    "load_table",
    "emit_table",
    "f_plus",
    "f_minus",
    "g_plus",
    "g_minus",
    "neutral_issues",
    "neutral_agents",
]


class Attitude(enum.IntEnum):
    AGAINST = -1
    NEUTRAL = 0
    FAVORABLE = 1

    def __str__(self) -> str:
        return {1: "+1", 0: "0", -1: "-1"}[int(self)]


_SPELLINGS = {"+1": Attitude.FAVORABLE, "1": Attitude.FAVORABLE, "0": Attitude.NEUTRAL, "-1": Attitude.AGAINST}


def _attitude(raw: object, where: str) -> Attitude:
    if isinstance(raw, str):
        token = raw.strip()
        if token in _SPELLINGS:
            return _SPELLINGS[token]
    elif isinstance(raw, (int, np.integer)) and not isinstance(raw, bool) and int(raw) in (-1, 0, 1):
        return Attitude(int(raw))
    raise TableError(f"cell {where}: value {raw!r} is not one of +1, 0, -1")


@dataclass(frozen=True, eq=False)
class SituationTable:
    """An immutable, validated situation table.

    ``values[i][j]`` is the attitude of ``agents[i]`` towards ``issues[j]``.
    """

    agents: tuple[str, ...]
    issues: tuple[str, ...]
    values: tuple[tuple[Attitude, ...], ...]
    fingerprint: str = field(default="", compare=False)

    f_plus_masks: tuple[int, ...] = field(init=False, repr=False)
    f_minus_masks: tuple[int, ...] = field(init=False, repr=False)
    g_plus_masks: tuple[int, ...] = field(init=False, repr=False)
    g_minus_masks: tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        agents = tuple(str(a) for a in self.agents)
        issues = tuple(str(c) for c in self.issues)
        if not agents:
            raise TableError("table has no agents")
        if not issues:
            raise TableError("table has no issues")
        _check_unique(agents, "agent")
        _check_unique(issues, "issue")
        if len(self.values) != len(agents):
            raise TableError(f"expected {len(agents)} rows of values, got {len(self.values)}")
        rows = []
        for agent, row in zip(agents, self.values):
            row = tuple(row)
            if len(row) != len(issues):
                raise TableError(f"row {agent!r} has {len(row)} cells, expected {len(issues)}")
            rows.append(tuple(_attitude(v, f"({agent}, {c})") for v, c in zip(row, issues)))
        values = tuple(rows)

        fp = [0] * len(agents)
        fm = [0] * len(agents)
        gp = [0] * len(issues)
        gm = [0] * len(issues)
        for i, row in enumerate(values):
            for j, v in enumerate(row):
                if v is Attitude.FAVORABLE:
                    fp[i] |= 1 << j
                    gp[j] |= 1 << i
                elif v is Attitude.AGAINST:
                    fm[i] |= 1 << j
                    gm[j] |= 1 << i

        set_ = object.__setattr__
        set_(self, "agents", agents)
        set_(self, "issues", issues)
        set_(self, "values", values)
        set_(self, "f_plus_masks", tuple(fp))
        set_(self, "f_minus_masks", tuple(fm))
        set_(self, "g_plus_masks", tuple(gp))
        set_(self, "g_minus_masks", tuple(gm))
        set_(self, "_agent_index", {a: i for i, a in enumerate(agents)})
        set_(self, "_issue_index", {c: j for j, c in enumerate(issues)})
        if not self.fingerprint:
            set_(self, "fingerprint", _sha256(emit_table(self, "json")))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SituationTable):
            return NotImplemented
        return (self.agents, self.issues, self.values) == (other.agents, other.issues, other.values)

    def __hash__(self) -> int:
        return hash((self.agents, self.issues, self.values))

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.agents), len(self.issues)

    def matrix(self) -> np.ndarray:
        """Values as a read-only ``int8`` array of shape ``(|U|, |V|)``."""
        arr = np.array(self.values, dtype=np.int8)
        arr.setflags(write=False)
        return arr

    def agent_index(self, agent: str) -> int:
        try:
            return self._agent_index[agent]  # type: ignore[attr-defined]
        except KeyError:
            raise UnknownElementError(f"unknown agent identifier {agent!r}") from None

    def issue_index(self, issue: str) -> int:
        try:
            return self._issue_index[issue]  # type: ignore[attr-defined]
        except KeyError:
            raise UnknownElementError(f"unknown issue identifier {issue!r}") from None

    def value(self, agent: str, issue: str) -> Attitude:
        return self.values[self.agent_index(agent)][self.issue_index(issue)]

    def agent_set(self, ids: Iterable[str] = ()) -> AgentSet:
        return AgentSet.from_ids(self.agents, ids)

    def issue_set(self, ids: Iterable[str] = ()) -> IssueSet:
        return IssueSet.from_ids(self.issues, ids)

    def all_agents(self) -> AgentSet:
        return AgentSet.full(self.agents)

    def all_issues(self) -> IssueSet:
        return IssueSet.full(self.issues)

    def transpose(self) -> SituationTable:
        """Swap the roles of agents and issues, keeping every cell value."""
        cols = tuple(tuple(row[j] for row in self.values) for j in range(len(self.issues)))
        return SituationTable(self.issues, self.agents, cols)

    @classmethod
    def from_matrix(
        cls, values: Sequence[Sequence[int]] | np.ndarray, agents: Sequence[str] | None = None,
        issues: Sequence[str] | None = None,
    ) -> SituationTable:
        """Build a table from a numeric matrix, naming elements x1.., c1.. by default."""
        rows = [list(r) for r in np.asarray(values).tolist()]
        n = len(rows)
        m = len(rows[0]) if rows else 0
        agents = tuple(agents) if agents is not None else tuple(f"x{i + 1}" for i in range(n))
        issues = tuple(issues) if issues is not None else tuple(f"c{j + 1}" for j in range(m))
        return cls(agents, issues, tuple(tuple(r) for r in rows))


def _check_unique(ids: tuple[str, ...], what: str) -> None:
    seen = set()
    for name in ids:
        if not name:
            raise TableError(f"empty {what} identifier")
        if name in seen:
            raise TableError(f"duplicate {what} identifier {name!r}")
        seen.add(name)


def _sha256(data: str | bytes) -> str:
    if isinstance(data, str):
        data = data.encode("utf-8")
    return hashlib.sha256(data).hexdigest()


# -- f and g maps ---------------------------------------------------------

def f_plus(table: SituationTable, agent: str) -> IssueSet:
    """Issues the agent supports."""
    return IssueSet(table.issues, table.f_plus_masks[table.agent_index(agent)])


def f_minus(table: SituationTable, agent: str) -> IssueSet:
    """Issues the agent opposes."""
    return IssueSet(table.issues, table.f_minus_masks[table.agent_index(agent)])


def neutral_issues(table: SituationTable, agent: str) -> IssueSet:
    i = table.agent_index(agent)
    return IssueSet(table.issues, ((1 << len(table.issues)) - 1) & ~(table.f_plus_masks[i] | table.f_minus_masks[i]))


def g_plus(table: SituationTable, issue: str) -> AgentSet:
    """Agents supporting the issue."""
    return AgentSet(table.agents, table.g_plus_masks[table.issue_index(issue)])


def g_minus(table: SituationTable, issue: str) -> AgentSet:
    """Agents opposing the issue."""
    return AgentSet(table.agents, table.g_minus_masks[table.issue_index(issue)])


def neutral_agents(table: SituationTable, issue: str) -> AgentSet:
    j = table.issue_index(issue)
    return AgentSet(table.agents, ((1 << len(table.agents)) - 1) & ~(table.g_plus_masks[j] | table.g_minus_masks[j]))


# -- ingestion / emission -------------------------------------------------

def parse_table(source: str | bytes, format: str = "csv") -> SituationTable:
    """Parse a situation table from CSV or JSON text.

    The fingerprint of the returned table is the SHA-256 of ``source`` (UTF-8
    encoded when given as text), so reports can be tied back to input bytes.

    Raises
    ------
    TableError
        On duplicate identifiers, missing cells, unknown cell values, or an
        empty universe.
    """
    fingerprint = _sha256(source)
    text = source.decode("utf-8-sig") if isinstance(source, bytes) else source
    if format == "csv":
        agents, issues, rows = _parse_csv(text)
    elif format == "json":
        agents, issues, rows = _parse_json(text)
    else:
        raise ValueError(f"unsupported table format {format!r}")
    return SituationTable(agents, issues, rows, fingerprint=fingerprint)


def _parse_csv(text: str) -> tuple[list[str], list[str], list[list[str]]]:
    records = [r for r in csv.reader(io.StringIO(text.lstrip("﻿"))) if any(cell.strip() for cell in r)]
    if not records:
        raise TableError("CSV input is empty")
    header = [cell.strip() for cell in records[0]]
    if header[0] not in ("", "agent"):
        raise TableError(f"first header cell must be empty or 'agent', got {header[0]!r}")
    issues = header[1:]
    agents = []
    rows = []
    for lineno, record in enumerate(records[1:], start=2):
        agent = record[0].strip()
        cells = [cell.strip() for cell in record[1:]]
        while len(cells) > len(issues) and cells[-1] == "":
            cells.pop()
        if len(cells) > len(issues):
            raise TableError(f"line {lineno}: row {agent!r} has {len(cells)} cells, expected {len(issues)}")
        for c, cell in zip(issues, cells + [""] * (len(issues) - len(cells))):
            if cell == "":
                raise TableError(f"missing cell ({agent}, {c})")
        agents.append(agent)
        rows.append(cells)
    return agents, issues, rows


def _parse_json(text: str) -> tuple[list[str], list[str], list[list[int]]]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise TableError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise TableError("JSON table must be an object")
    for key in ("agents", "issues", "values"):
        if key not in doc:
            raise TableError(f"JSON table lacks {key!r}")
    agents, issues, values = doc["agents"], doc["issues"], doc["values"]
    if not isinstance(values, list) or not all(isinstance(r, list) for r in values):
        raise TableError("'values' must be an array of arrays")
    if len(values) != len(agents):
        raise TableError(f"'values' has {len(values)} rows for {len(agents)} agents")
    for agent, row in zip(agents, values):
        if len(row) < len(issues):
            raise TableError(f"missing cell ({agent}, {issues[len(row)]})")
    return list(map(str, agents)), list(map(str, issues)), values


def emit_table(table: SituationTable, format: str = "csv") -> str:
    """Serialise a table; ``parse_table(emit_table(t, f), f) == t``."""
    if format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["agent", *table.issues])
        for agent, row in zip(table.agents, table.values):
            writer.writerow([agent, *(str(v) for v in row)])
        return buf.getvalue()
    if format == "json":
        doc = {
            "agents": list(table.agents),
            "issues": list(table.issues),
            "values": [[int(v) for v in row] for row in table.values],
        }
        return json.dumps(doc, separators=(",", ":"))
    raise ValueError(f"unsupported table format {format!r}")


def load_table(path: str, format: str | None = None) -> SituationTable:
    """Read a table from disk; the format defaults to the file extension."""
    if format is None:
        format = "json" if str(path).lower().endswith(".json") else "csv"
    with open(path, "rb") as fh:
        return parse_table(fh.read(), format)

"""Exception hierarchy.

Everything raised on purpose derives from :class:`TriconflictError` so callers
(the CLI in particular) can map failures onto exit codes without catching
unrelated bugs.
"""


class TriconflictError(Exception):
    """Base class for all library errors."""


class TableError(TriconflictError, ValueError):
    """Malformed or inconsistent situation table data."""


class UnknownElementError(TriconflictError, KeyError):
    """An agent or issue identifier that is not part of the table."""

    def __str__(self) -> str:
        # KeyError quotes its argument; keep the plain message instead.
        return str(self.args[0]) if self.args else ""


class EvaluationError(TriconflictError, ValueError):
    """An evaluation was requested outside its domain (e.g. empty subject)."""


class ThresholdError(TriconflictError, ValueError):
    """Threshold values outside their admissible range."""


class PartitionError(TriconflictError):
    """Three regions that fail to partition their universe."""


class UniverseMismatchError(TriconflictError, ValueError):
    """Set operands, splits or evaluations drawn from different universes."""

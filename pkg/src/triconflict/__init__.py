"""Three-way-decision conflict analysis over situation tables."""

from .agents import (
    trisect_agents_fqw,
    trisect_agents_generic,
    trisect_agents_smz,
    two_way_accept_agents,
    two_way_reject_agents,
)
from .errors import (
    EvaluationError,
    PartitionError,
    TableError,
    ThresholdError,
    TriconflictError,
    UniverseMismatchError,
    UnknownElementError,
)
from .evaluation import (
    BOOLEAN,
    BooleanScale,
    Evaluation,
    IntervalScale,
    Thresholds,
    boolean_pair,
    degree_pair,
    is_designated,
    mu_a,
    mu_r,
    nu_a,
    nu_r,
    omega_a,
    omega_r,
    psi_a,
    psi_r,
)
from .issues import (
    trisect_issues_fqw,
    trisect_issues_generic,
    trisect_issues_smz,
    two_way_accept_issues,
    two_way_reject_issues,
)
from .regions import Family, ModelSpec, Trisection, TwoWaySplit, compose_three_way
from .sets import AgentSet, IssueSet, Universe
from .situation import (
    Attitude,
    SituationTable,
    emit_table,
    f_minus,
    f_plus,
    g_minus,
    g_plus,
    load_table,
    parse_table,
)

__version__ = "0.1.0"


def mideast_path() -> str:
    """Filesystem path of the bundled Middle East situation table."""
    from importlib.resources import files

    return str(files(__package__) / "data" / "mideast.csv")


def mideast() -> SituationTable:
    return load_table(mideast_path())

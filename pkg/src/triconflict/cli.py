"""``triconflict`` command line.

Exit codes: 0 success, 1 audit counterexample, 2 usage error, 3 data error.
"""

from __future__ import annotations

import sys
from typing import Optional

import click

from .audit import AUDITS, DEFAULT_THRESHOLDS, run_audit
from .engine import perspective, trisect, trisect_fqw, trisect_smz
from .errors import EvaluationError, ThresholdError, TriconflictError, UnknownElementError
from .evaluation import Thresholds, boolean_pair, degree_pair
from .regions import Family, ModelSpec
from .report import compare_report, render, render_json, sweep_report, trisect_report
from .sets import ElementSet, Universe
from .situation import SituationTable, load_table
from .sweeps import needs_nonempty, subject_count, sweep

EXIT_AUDIT_FAILED = 1
EXIT_USAGE = 2
EXIT_DATA = 3


class DataError(click.ClickException):
    exit_code = EXIT_DATA

    def show(self, file=None) -> None:
        click.echo(f"error: {self.format_message()}", err=True)


def _load(path: str, fmt: Optional[str]) -> SituationTable:
    try:
        return load_table(path, fmt)
    except OSError as exc:
        raise DataError(f"cannot read table {path!r}: {exc.strerror or exc}") from None
    except TriconflictError as exc:
        raise DataError(str(exc)) from None


def _thresholds(alpha: Optional[str], beta: Optional[str], required: bool) -> Optional[Thresholds]:
    if alpha is None and beta is None:
        if required:
            raise click.UsageError("--alpha and --beta are required for this model")
        return None
    if alpha is None or beta is None:
        raise click.UsageError("--alpha and --beta must be given together")
    try:
        return Thresholds(alpha, beta)
    except (ThresholdError, TypeError) as exc:
        raise click.UsageError(str(exc)) from None


def _subject(table: SituationTable, universe: Universe, raw: str) -> ElementSet:
    view = perspective(table, universe)
    ids = [s.strip() for s in raw.split(",") if s.strip()]
    try:
        return view.subject_type.from_ids(view.subjects, ids)
    except UnknownElementError as exc:
        raise click.UsageError(str(exc)) from None


def _model(universe: Universe, family: Family, thresholds: Optional[Thresholds], scale: str,
           printed_rejection: bool) -> ModelSpec:
    if family is Family.GENERIC:
        if scale == "degree":
            if thresholds is None:
                raise click.UsageError("--scale degree needs --alpha and --beta")
            pair = degree_pair(universe, thresholds)
        else:
            if thresholds is not None:
                raise click.UsageError("--alpha/--beta only apply to the fqw model or --scale degree")
            pair = boolean_pair(universe, printed_rejection=printed_rejection)
        return ModelSpec(family, universe, evaluations=pair)
    if family is Family.SMZ and thresholds is not None:
        raise click.UsageError("the smz model takes no thresholds")
    return ModelSpec(family, universe, thresholds=thresholds)


table_option = click.option("--table", "table_path", required=True, type=click.Path(dir_okay=False),
                            help="Situation table (CSV or JSON).")
format_option = click.option("--format", "table_format", type=click.Choice(["csv", "json"]), default=None,
                             help="Table format; defaults to the file extension.")
universe_option = click.option("--universe", type=click.Choice(["agents", "issues"]), required=True,
                               help="Universe to trisect.")
model_option = click.option("--model", "family", type=click.Choice(["generic", "smz", "fqw"]), required=True)
alpha_option = click.option("--alpha", default=None, help="Acceptance threshold, e.g. 0.5 or 1/2.")
beta_option = click.option("--beta", default=None, help="Rejection threshold.")
output_option = click.option("--output", type=click.Choice(["json", "csv", "markdown"]), default="json")
scale_option = click.option("--scale", type=click.Choice(["boolean", "degree"]), default="boolean",
                            help="Evaluation pair for the generic model.")
printed_option = click.option("--printed-rejection", is_flag=True,
                              help="Generic Boolean model: test the rejection image against the subject's complement.")


@click.group()
@click.version_option(package_name="artifact")
def main() -> None:
    """Three-way conflict analysis of situation tables."""


@main.command("trisect")
@table_option
@format_option
@universe_option
@model_option
@click.option("--subject", required=True, help="Comma-separated ids of the strategy or agent group.")
@alpha_option
@beta_option
@output_option
@scale_option
@printed_option
def cmd_trisect(table_path, table_format, universe, family, subject, alpha, beta, output, scale, printed_rejection):
    """Trisect one universe against one subject."""
    universe, family = Universe(universe), Family(family)
    thresholds = _thresholds(alpha, beta, required=family is Family.FQW)
    table = _load(table_path, table_format)
    model = _model(universe, family, thresholds, scale, printed_rejection)
    subj = _subject(table, universe, subject)
    if not subj and needs_nonempty(model):
        raise click.UsageError(f"the {family} model needs a nonempty subject")
    try:
        result = trisect(table, model, subj)
        click.echo(render(trisect_report(table, model, result), output), nl=False)
    except EvaluationError as exc:
        raise click.UsageError(str(exc)) from None
    except TriconflictError as exc:
        raise DataError(str(exc)) from None


@main.command("sweep")
@table_option
@format_option
@universe_option
@model_option
@alpha_option
@beta_option
@output_option
@scale_option
@printed_option
def cmd_sweep(table_path, table_format, universe, family, alpha, beta, output, scale, printed_rejection):
    """Trisect against every subject, in ascending bitmask order."""
    universe, family = Universe(universe), Family(family)
    thresholds = _thresholds(alpha, beta, required=family is Family.FQW)
    table = _load(table_path, table_format)
    model = _model(universe, family, thresholds, scale, printed_rejection)
    n = len(perspective(table, universe).subjects)
    try:
        results = sweep(table, model)
        report = sweep_report(table, model, results, subject_count(n, needs_nonempty(model)))
    except TriconflictError as exc:
        raise DataError(str(exc)) from None
    click.echo(render(report, output), nl=False)


@main.command("audit")
@table_option
@format_option
@click.option("--property", "prop", required=True, type=click.Choice(list(AUDITS)))
@alpha_option
@beta_option
def cmd_audit(table_path, table_format, prop, alpha, beta):
    """Check a property over all subjects; exit 1 with counterexamples on failure."""
    thresholds = _thresholds(alpha, beta, required=False) or DEFAULT_THRESHOLDS
    table = _load(table_path, table_format)
    try:
        result = run_audit(table, prop, thresholds)
    except TriconflictError as exc:
        raise DataError(str(exc)) from None
    doc = {"table": {"fingerprint": table.fingerprint}, "alpha": str(thresholds.alpha),
           "beta": str(thresholds.beta)} | result.to_dict()
    click.echo(render_json(doc), nl=False)
    if not result.passed:
        sys.exit(EXIT_AUDIT_FAILED)


@main.command("compare")
@table_option
@format_option
@universe_option
@click.option("--subject", required=True, help="Comma-separated ids of the strategy or agent group.")
@click.option("--alpha", required=True, help="Acceptance threshold.")
@click.option("--beta", required=True, help="Rejection threshold.")
@output_option
def cmd_compare(table_path, table_format, universe, subject, alpha, beta, output):
    """Set-inclusion and inclusion-degree trisections side by side."""
    universe = Universe(universe)
    thresholds = _thresholds(alpha, beta, required=True)
    table = _load(table_path, table_format)
    subj = _subject(table, universe, subject)
    if not subj:
        raise click.UsageError("compare needs a nonempty subject")
    try:
        report = compare_report(table, trisect_smz(table, universe, subj), trisect_fqw(table, universe, subj, thresholds))
    except TriconflictError as exc:
        raise DataError(str(exc)) from None
    click.echo(render(report, output), nl=False)


if __name__ == "__main__":  # pragma: no cover
    main()

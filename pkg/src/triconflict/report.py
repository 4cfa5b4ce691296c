"""Report assembly and rendering (JSON is canonical; CSV and markdown mirror it)."""

from __future__ import annotations

import csv
import io
import json
from collections import Counter
from typing import Iterable

from .engine import evaluation_matrix, perspective
from .errors import PartitionError
from .regions import ModelSpec, Trisection, partition_violations
from .situation import SituationTable

REGIONS = ("pos", "neg", "bnd")
REGION_LABELS = {"pos": "agreement (POS)", "neg": "disagreement (NEG)", "bnd": "neutral (BND)"}


def _table_block(table: SituationTable) -> dict:
    return {
        "fingerprint": table.fingerprint,
        "agents": list(table.agents),
        "issues": list(table.issues),
    }


def _checked(t: Trisection) -> dict:
    # re-validate at emission time; a report never carries a broken partition
    problems = partition_violations(*t.masks(), t.pos.full_mask)
    if problems:
        raise PartitionError("refusing to report: " + "; ".join(problems))
    entry = {"subject": t.subject.ids() if t.subject is not None else None}
    entry.update(t.regions())
    return entry


def trisect_report(
    table: SituationTable, model: ModelSpec, trisection: Trisection, with_evaluations: bool = True
) -> dict:
    report = {
        "kind": "trisect",
        "table": _table_block(table),
        "model": model.describe(),
        "subject": trisection.subject.ids() if trisection.subject is not None else [],
        "trisections": [_checked(trisection)],
    }
    if with_evaluations and trisection.subject is not None:
        report["evaluations"] = evaluation_matrix(table, model, trisection.subject)
    return report


def sweep_report(table: SituationTable, model: ModelSpec, trisections: Iterable[Trisection], expected: int) -> dict:
    entries = [_checked(t) for t in trisections]
    if len(entries) != expected:
        raise PartitionError(f"sweep produced {len(entries)} trisections, expected {expected}")
    hist = {}
    for region in REGIONS:
        counts = Counter(len(e[region]) for e in entries)
        hist[region] = {str(size): counts[size] for size in sorted(counts)}
    return {
        "kind": "sweep",
        "table": _table_block(table),
        "model": model.describe(),
        "subject": "all-subjects sweep",
        "subjects": len(entries),
        "histograms": hist,
        "trisections": entries,
    }


def compare_report(table: SituationTable, smz: Trisection, fqw: Trisection) -> dict:
    assert fqw.model is not None and fqw.model.thresholds is not None
    view = perspective(table, smz.universe)
    symdiff = {r: (getattr(smz, r) ^ getattr(fqw, r)).ids() for r in REGIONS}
    disagreements = [
        {"element": e, "smz": smz.region_of(e), "fqw": fqw.region_of(e)}
        for e in view.elements
        if smz.region_of(e) != fqw.region_of(e)
    ]
    return {
        "kind": "compare",
        "table": _table_block(table),
        "universe": str(smz.universe),
        "subject": smz.subject.ids() if smz.subject is not None else [],
        "alpha": str(fqw.model.thresholds.alpha),
        "beta": str(fqw.model.thresholds.beta),
        "models": {"smz": _checked(smz), "fqw": _checked(fqw)},
        "symmetric_difference": symdiff,
        "disagreements": disagreements,
        "agree": not disagreements,
    }


# -- rendering ------------------------------------------------------------------

def render_json(report: dict) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"


def render_csv(report: dict) -> str:
    """Long format: one row per (subject, element) with its region."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if report["kind"] == "compare":
        writer.writerow(["element", "smz", "fqw", "agree"])
        regions = {m: {e: r for r in REGIONS for e in report["models"][m][r]} for m in ("smz", "fqw")}
        universe = report["table"]["agents" if report["universe"] == "agents" else "issues"]
        for e in universe:
            writer.writerow([e, regions["smz"][e], regions["fqw"][e], str(regions["smz"][e] == regions["fqw"][e]).lower()])
        return buf.getvalue()
    writer.writerow(["subject", "element", "region"])
    for entry in report["trisections"]:
        subject = ";".join(entry["subject"] or [])
        placed = {e: r for r in REGIONS for e in entry[r]}
        order = report["table"]["agents" if report["model"]["universe"] == "agents" else "issues"]
        for e in order:
            writer.writerow([subject, e, placed[e]])
    return buf.getvalue()


def _fmt_set(ids: list[str]) -> str:
    return "{" + ", ".join(ids) + "}" if ids else "∅"


def _md_grid(evaluations: dict) -> list[str]:
    """2x2 grid: acceptance split on rows, rejection split on columns."""
    cells = {(a, r): [] for a in (True, False) for r in (True, False)}
    for element, ev in evaluations.items():
        cells[(ev["accepted"], ev["rejected"])].append(element)
    head = "| acceptance \\ rejection | rejected | not rejected |"
    return [
        head,
        "|---|---|---|",
        f"| accepted | BND (non-commitment): {_fmt_set(cells[(True, True)])} "
        f"| POS (acceptance): {_fmt_set(cells[(True, False)])} |",
        f"| not accepted | NEG (rejection): {_fmt_set(cells[(False, True)])} "
        f"| BND (non-commitment): {_fmt_set(cells[(False, False)])} |",
    ]


def render_markdown(report: dict) -> str:
    lines: list[str] = []
    kind = report["kind"]
    if kind == "compare":
        lines.append(f"## Model comparison on {report['universe']}, subject {_fmt_set(report['subject'])}")
        lines.append("")
        lines.append(f"alpha = {report['alpha']}, beta = {report['beta']}")
        lines.append("")
        lines.append("| region | smz | fqw | symmetric difference |")
        lines.append("|---|---|---|---|")
        for r in REGIONS:
            lines.append(
                f"| {REGION_LABELS[r]} | {_fmt_set(report['models']['smz'][r])} "
                f"| {_fmt_set(report['models']['fqw'][r])} | {_fmt_set(report['symmetric_difference'][r])} |"
            )
        lines.append("")
        if report["agree"]:
            lines.append("The two models agree on every element.")
        else:
            lines.append("Disagreements: " + ", ".join(
                f"**{d['element']}** (smz {d['smz']}, fqw {d['fqw']})" for d in report["disagreements"]))
        return "\n".join(lines) + "\n"

    model = report["model"]
    title = f"## {model['family']} trisection of {model['universe']}"
    if "alpha" in model:
        title += f" (alpha = {model['alpha']}, beta = {model['beta']})"
    lines += [title, ""]
    if kind == "sweep":
        lines.append(f"{report['subjects']} subjects, ascending bitmask order.")
        lines.append("")
        lines.append("| subject | POS | NEG | BND |")
        lines.append("|---|---|---|---|")
        for e in report["trisections"]:
            lines.append(f"| {_fmt_set(e['subject'])} | {_fmt_set(e['pos'])} | {_fmt_set(e['neg'])} | {_fmt_set(e['bnd'])} |")
        return "\n".join(lines) + "\n"

    entry = report["trisections"][0]
    lines.append(f"Subject: {_fmt_set(report['subject'])}")
    lines.append("")
    if "evaluations" in report:
        lines += _md_grid(report["evaluations"])
        lines.append("")
    for r in REGIONS:
        lines.append(f"- {REGION_LABELS[r]}: {_fmt_set(entry[r])}")
    return "\n".join(lines) + "\n"


RENDERERS = {"json": render_json, "csv": render_csv, "markdown": render_markdown}


def render(report: dict, output: str = "json") -> str:
    return RENDERERS[output](report)

"""Exhaustive property checks over every subject of a table.

Each check recomputes the property from first principles (element-by-element
inclusion and intersection tests on bit masks) and compares the result with
what the library functions return.  A failing subject becomes a
counterexample carrying enough information to re-run it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Optional

from . import kernels
from .engine import Perspective, perspective, trisect_fqw, trisect_generic, trisect_smz, two_way
from .errors import PartitionError
from .evaluation import Thresholds, boolean_pair, degree_pair
from .regions import Family, ModelSpec, SplitKind, Trisection, compose_three_way, partition_violations
from .rough import apr_f, apr_g
from .sets import Universe
from .situation import SituationTable, emit_table
from .sweeps import check_cap

DEFAULT_THRESHOLDS = Thresholds(Fraction(1, 2), Fraction(1, 2))


@dataclass
class AuditResult:
    property: str
    subjects_checked: int = 0
    counterexamples: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def fail(self, view: Perspective, subject_mask: int, detail: str, **extra) -> None:
        entry = {
            "universe": str(view.universe),
            "subject": view.subject(subject_mask).ids(),
            "detail": detail,
        }
        entry.update(extra)
        self.counterexamples.append(entry)

    def to_dict(self) -> dict:
        return {
            "property": self.property,
            "passed": self.passed,
            "subjects_checked": self.subjects_checked,
            "counterexamples": self.counterexamples,
        }


def reproducer(table: SituationTable, result: AuditResult, thresholds: Optional[Thresholds] = None) -> dict:
    """A self-contained record that re-runs a failed audit from the CLI."""
    t = thresholds or DEFAULT_THRESHOLDS
    return {
        "table_json": emit_table(table, "json"),
        "command": f"triconflict audit --table TABLE.json --property {result.property} --alpha {t.alpha} --beta {t.beta}",
        "result": result.to_dict(),
    }


def _subjects(view: Perspective, skip_empty: bool = False) -> range:
    return range(1 if skip_empty else 0, 1 << len(view.subjects))


def _views(universes: Iterable[Universe], table: SituationTable) -> list[Perspective]:
    return [perspective(table, u) for u in universes]


BOTH = (Universe.AGENTS, Universe.ISSUES)


def _fmt(view: Perspective, masks: tuple[int, int, int]) -> str:
    names = lambda m: "{" + ",".join(view.element_type(view.elements, m).ids()) + "}"  # noqa: E731
    return f"pos={names(masks[0])} neg={names(masks[1])} bnd={names(masks[2])}"


def _try(result: AuditResult, view: Perspective, s: int, label: str, fn: Callable[[], Trisection]):
    try:
        return fn()
    except PartitionError as exc:
        result.fail(view, s, f"{label}: {exc}")
        return None


# -- partition ----------------------------------------------------------------

def audit_partition(table: SituationTable, thresholds: Thresholds = DEFAULT_THRESHOLDS) -> AuditResult:
    result = AuditResult("partition")
    for view in _views(BOTH, table):
        check_cap(table, _model_for(view))
        u = view.universe
        bool_pair = boolean_pair(u)
        deg_pair = degree_pair(u, thresholds)
        m = len(view.subjects)
        models: list[tuple[str, bool, Callable[[int], Trisection]]] = [
            ("smz", False, lambda s: trisect_smz(table, u, view.subject(s))),
            ("generic/boolean", False, lambda s: trisect_generic(table, u, view.subject(s), *bool_pair)),
            ("fqw", True, lambda s: trisect_fqw(table, u, view.subject(s), thresholds)),
            ("generic/degree", True, lambda s: trisect_generic(table, u, view.subject(s), *deg_pair)),
        ]
        for label, skip_empty, fn in models:
            for s in _subjects(view, skip_empty):
                result.subjects_checked += 1
                t = _try(result, view, s, label, lambda: fn(s))
                if t is None:
                    continue
                problems = partition_violations(*t.masks(), view.full)
                if problems:
                    result.fail(view, s, f"{label}: " + "; ".join(problems))
        # the kernels never build Trisection objects, so check their raw output too
        sweeps = [
            ("smz sweep", False, kernels.smz_sweep(view.plus, view.minus, m)),
            ("fqw sweep", True, kernels.fqw_sweep(view.plus, view.minus, m, thresholds.alpha, thresholds.beta)),
        ]
        for label, skip_empty, (pos, neg) in sweeps:
            for s in _subjects(view, skip_empty):
                result.subjects_checked += 1
                p, n = int(pos[s]), int(neg[s])
                problems = partition_violations(p, n, view.full & ~(p | n), view.full)
                if p & ~view.full or n & ~view.full:
                    problems.append("kernel set bits outside the universe")
                if problems:
                    result.fail(view, s, f"{label}: " + "; ".join(problems))
    return result


def _model_for(view: Perspective) -> ModelSpec:
    return ModelSpec(Family.SMZ, view.universe)


# -- reformulation theorems ------------------------------------------------------

def _inclusion_sets(view: Perspective, s: int) -> tuple[int, int, int, int]:
    """(plus inside S, minus inside S, plus meets S^C, minus meets S^C), elementwise."""
    outside = view.subject_full & ~s
    lp = lm = mp = mm = 0
    for i, (p, q) in enumerate(zip(view.plus, view.minus)):
        if all(not (p >> b & 1) or (s >> b & 1) for b in range(len(view.subjects))):
            lp |= 1 << i
        if all(not (q >> b & 1) or (s >> b & 1) for b in range(len(view.subjects))):
            lm |= 1 << i
        if any((p >> b & 1) and (outside >> b & 1) for b in range(len(view.subjects))):
            mp |= 1 << i
        if any((q >> b & 1) and (outside >> b & 1) for b in range(len(view.subjects))):
            mm |= 1 << i
    return lp, lm, mp, mm


def difference_form(view: Perspective, s: int) -> tuple[int, int, int]:
    """POS = L+ - L-, NEG = L- - L+, BND = U - (POS | NEG)."""
    lp, lm, _, _ = _inclusion_sets(view, s)
    pos, neg = lp & ~lm, lm & ~lp
    return pos, neg, view.full & ~(pos | neg)


def intersection_form(view: Perspective, s: int) -> tuple[int, int, int]:
    """POS = L+ & {minus meets S^C}, NEG = L- & {plus meets S^C}, BND = POS^C & NEG^C."""
    lp, lm, mp, mm = _inclusion_sets(view, s)
    pos, neg = lp & mm, lm & mp
    return pos, neg, (view.full & ~pos) & (view.full & ~neg)


def inclusion_form(view: Perspective, s: int) -> tuple[int, int, int]:
    """Everything stated with inclusion and its negation only."""
    lp, lm, _, _ = _inclusion_sets(view, s)
    nlp, nlm = view.full & ~lp, view.full & ~lm
    return lp & nlm, lm & nlp, (lp & lm) | (nlp & nlm)


def _audit_reformulations(table: SituationTable, name: str, universe: Universe, forms) -> AuditResult:
    result = AuditResult(name)
    view = perspective(table, universe)
    check_cap(table, _model_for(view))
    for s in _subjects(view):
        result.subjects_checked += 1
        t = _try(result, view, s, "smz", lambda: trisect_smz(table, universe, view.subject(s)))
        if t is None:
            continue
        reference = t.masks()
        for label, form in forms:
            got = form(view, s)
            if got != reference:
                result.fail(view, s, f"{label} gives {_fmt(view, got)} but the model gives {_fmt(view, reference)}")
    return result


def audit_thm34(table: SituationTable, thresholds: Thresholds = DEFAULT_THRESHOLDS) -> AuditResult:
    forms = [("difference form", difference_form), ("intersection form", intersection_form)]
    return _audit_reformulations(table, "thm34", Universe.AGENTS, forms)


def audit_thm35(table: SituationTable, thresholds: Thresholds = DEFAULT_THRESHOLDS) -> AuditResult:
    forms = [("difference form", difference_form), ("intersection form", intersection_form),
             ("inclusion form", inclusion_form)]
    return _audit_reformulations(table, "thm35", Universe.AGENTS, forms)


def audit_thm44(table: SituationTable, thresholds: Thresholds = DEFAULT_THRESHOLDS) -> AuditResult:
    forms = [("difference form", difference_form), ("intersection form", intersection_form)]
    return _audit_reformulations(table, "thm44", Universe.ISSUES, forms)


def audit_thm45(table: SituationTable, thresholds: Thresholds = DEFAULT_THRESHOLDS) -> AuditResult:
    forms = [("difference form", difference_form), ("intersection form", intersection_form),
             ("inclusion form", inclusion_form)]
    return _audit_reformulations(table, "thm45", Universe.ISSUES, forms)


# -- composition ------------------------------------------------------------------

def audit_compose(table: SituationTable, thresholds: Thresholds = DEFAULT_THRESHOLDS) -> AuditResult:
    """Generic trisection equals the composition of its two two-way splits."""
    result = AuditResult("compose")
    for view in _views(BOTH, table):
        check_cap(table, _model_for(view))
        u = view.universe
        for label, pair, skip_empty in (
            ("boolean", boolean_pair(u), False),
            ("degree", degree_pair(u, thresholds), True),
        ):
            for s in _subjects(view, skip_empty):
                result.subjects_checked += 1
                subject = view.subject(s)
                direct = _try(result, view, s, label, lambda: trisect_generic(table, u, subject, *pair))
                composed = _try(result, view, s, label, lambda: compose_three_way(
                    two_way(table, u, subject, pair[0], SplitKind.ACCEPTANCE),
                    two_way(table, u, subject, pair[1], SplitKind.REJECTION),
                ))
                if direct is None or composed is None:
                    continue
                if direct.masks() != composed.masks():
                    result.fail(view, s, f"{label}: direct {_fmt(view, direct.masks())} "
                                         f"vs composed {_fmt(view, composed.masks())}")
    return result


# -- reductions ---------------------------------------------------------------------

def _audit_reduction(table: SituationTable, name: str, thresholds: Thresholds, degree: bool) -> AuditResult:
    result = AuditResult(name)
    for view in _views(BOTH, table):
        check_cap(table, _model_for(view))
        u = view.universe
        m = len(view.subjects)
        if degree:
            pair = degree_pair(u, thresholds)
            special = lambda subj: trisect_fqw(table, u, subj, thresholds)  # noqa: E731
            pos, neg = kernels.fqw_sweep(view.plus, view.minus, m, thresholds.alpha, thresholds.beta)
            label = "fqw"
        else:
            pair = boolean_pair(u)
            special = lambda subj: trisect_smz(table, u, subj)  # noqa: E731
            pos, neg = kernels.smz_sweep(view.plus, view.minus, m)
            label = "smz"
        for s in _subjects(view, skip_empty=degree):
            result.subjects_checked += 1
            subject = view.subject(s)
            a = _try(result, view, s, label, lambda: special(subject))
            g = _try(result, view, s, "generic", lambda: trisect_generic(table, u, subject, *pair))
            if a is None or g is None:
                continue
            p, n = int(pos[s]), int(neg[s])
            swept = (p, n, view.full & ~(p | n))
            if a.masks() != g.masks():
                result.fail(view, s, f"{label} {_fmt(view, a.masks())} vs generic {_fmt(view, g.masks())}")
            elif swept != a.masks():
                result.fail(view, s, f"{label} sweep kernel {_fmt(view, swept)} vs {label} {_fmt(view, a.masks())}")
    return result


def audit_reduce_smz(table: SituationTable, thresholds: Thresholds = DEFAULT_THRESHOLDS) -> AuditResult:
    return _audit_reduction(table, "reduce-smz", thresholds, degree=False)


def audit_reduce_fqw(table: SituationTable, thresholds: Thresholds = DEFAULT_THRESHOLDS) -> AuditResult:
    return _audit_reduction(table, "reduce-fqw", thresholds, degree=True)


# -- upper approximations ----------------------------------------------------------

def audit_upper_duality(table: SituationTable, thresholds: Thresholds = DEFAULT_THRESHOLDS) -> AuditResult:
    """``not (image <= S^C)`` and ``image & S != {}`` select the same elements."""
    result = AuditResult("upper-duality")
    for view in _views(BOTH, table):
        check_cap(table, _model_for(view))
        apr = apr_f if view.universe is Universe.AGENTS else apr_g
        for s in _subjects(view):
            result.subjects_checked += 1
            outside = view.subject_full & ~s
            for sign, images in (("+", view.plus), ("-", view.minus)):
                by_complement = by_meet = 0
                for i, image in enumerate(images):
                    if not (image & ~outside == 0):
                        by_complement |= 1 << i
                    if image & s:
                        by_meet |= 1 << i
                library = apr(table, sign, "upper", view.subject(s)).mask
                if not by_complement == by_meet == library:
                    result.fail(view, s, f"upper{sign}: complement form {by_complement:#x}, "
                                         f"intersection form {by_meet:#x}, library {library:#x}")
    return result


# -- mirror symmetry -----------------------------------------------------------------

def audit_mirror(table: SituationTable, thresholds: Thresholds = DEFAULT_THRESHOLDS) -> AuditResult:
    """Issue trisections of a table equal agent trisections of its transpose."""
    result = AuditResult("mirror")
    flipped = table.transpose()
    view = perspective(table, Universe.ISSUES)
    check_cap(table, _model_for(view))
    runs = [
        ("smz", False, lambda t, u, subj: trisect_smz(t, u, subj)),
        ("fqw", True, lambda t, u, subj: trisect_fqw(t, u, subj, thresholds)),
        ("generic/boolean", False, lambda t, u, subj: trisect_generic(t, u, subj, *boolean_pair(u))),
        ("generic/degree", True, lambda t, u, subj: trisect_generic(t, u, subj, *degree_pair(u, thresholds))),
    ]
    flipped_view = perspective(flipped, Universe.AGENTS)
    for label, skip_empty, run in runs:
        for s in _subjects(view, skip_empty):
            result.subjects_checked += 1
            a = run(table, Universe.ISSUES, view.subject(s))
            b = run(flipped, Universe.AGENTS, flipped_view.subject(s))
            if a.regions() != b.regions():
                result.fail(view, s, f"{label}: issues {a.regions()} vs transposed agents {b.regions()}")
    return result


AUDITS: dict[str, Callable[[SituationTable, Thresholds], AuditResult]] = {
    "partition": audit_partition,
    "thm34": audit_thm34,
    "thm35": audit_thm35,
    "thm44": audit_thm44,
    "thm45": audit_thm45,
    "compose": audit_compose,
    "reduce-smz": audit_reduce_smz,
    "reduce-fqw": audit_reduce_fqw,
    "upper-duality": audit_upper_duality,
    "mirror": audit_mirror,
}


def run_audit(table: SituationTable, name: str, thresholds: Optional[Thresholds] = None) -> AuditResult:
    try:
        fn = AUDITS[name]
    except KeyError:
        raise ValueError(f"unknown property {name!r}; choose from {', '.join(AUDITS)}") from None
    return fn(table, thresholds or DEFAULT_THRESHOLDS)

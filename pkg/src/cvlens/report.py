"""Report rendering: human text, delimited CSV, and figures.

The report path writes three artifacts side by side: the canonical JSON
report, a suggestions.csv for spreadsheet triage, and PNG figures (summary
counts per suggestion kind, and support bars for the top recommendation of
each flagged field).
"""

from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .evaluator import EvaluationReport, Suggestion, SuggestionKind
from .wire import canonical_json, report_to_dict

_KIND_LABEL = {
    SuggestionKind.SECTION_COMPLETENESS: "missing section",
    SuggestionKind.SPECIFICITY: "could be more specific",
    SuggestionKind.SPELLING: "possible spelling issue",
    SuggestionKind.CASING: "check capitalization",
    SuggestionKind.AMBIGUITY: "ambiguous name",
}

CSV_COLUMNS = [
    "position",
    "kind",
    "section",
    "instance",
    "field",
    "original",
    "cohort_rate",
    "cohort_size",
    "top_recommendation",
    "top_support",
    "alternatives",
]


def _location_text(sug: Suggestion) -> str:
    loc = sug.location
    if loc.instance is None:
        return loc.section.value
    return f"{loc.section.value}[{loc.instance}].{loc.field.value}"


def render_text(report: EvaluationReport) -> str:
    """Human-readable rendering: summary banner then one card per suggestion."""
    lines = []
    total = sum(report.summary.values())
    ref = report.profile_ref
    who = ref if isinstance(ref, str) else f"{ref['source']}/{ref['id']}"
    lines.append(f"Evaluation of {who}: {total} suggestion{'s' if total != 1 else ''}")
    parts = [
        f"{kind.value}={count}" for kind, count in report.summary.items() if count
    ]
    lines.append("  " + (", ".join(parts) if parts else "nothing to improve"))
    lines.append("")
    for i, sug in enumerate(report.suggestions, start=1):
        lines.append(f"[{i}] {_location_text(sug)}: {_KIND_LABEL[sug.kind]}")
        if sug.kind == SuggestionKind.SECTION_COMPLETENESS:
            rate = sug.rationale.get("cohort_rate", 0.0)
            size = sug.rationale.get("cohort_size", 0)
            lines.append(
                f"    {rate:.0%} of {size} similar profiles fill this section"
            )
        else:
            lines.append(f"    you wrote: {sug.original!r}")
            for rec in sug.recommendations:
                lines.append(f"    - {rec.surface}  ({rec.support} profiles)")
        lines.append("")
    return "\n".join(lines)


def write_report_files(report: EvaluationReport, out_dir: Path | str) -> dict[str, Path]:
    """Write report.json, suggestions.csv, and the figures into out_dir.

    Returns the paths keyed by artifact name.
    """
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    json_path = out_dir / "report.json"
    json_path.write_text(canonical_json(report_to_dict(report)), encoding="utf-8")

    csv_path = out_dir / "suggestions.csv"
    with open(csv_path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_COLUMNS)
        for i, sug in enumerate(report.suggestions, start=1):
            top = sug.recommendations[0] if sug.recommendations else None
            writer.writerow(
                [
                    i,
                    sug.kind.value,
                    sug.location.section.value,
                    "" if sug.location.instance is None else sug.location.instance,
                    sug.location.field.value if sug.location.field else "",
                    sug.original,
                    sug.rationale.get("cohort_rate", ""),
                    sug.rationale.get("cohort_size", ""),
                    top.surface if top else "",
                    top.support if top else "",
                    "; ".join(r.surface for r in sug.recommendations[1:]),
                ]
            )

    summary_path = out_dir / "summary.png"
    _summary_figure(report, summary_path)
    recs_path = out_dir / "recommendations.png"
    _recommendations_figure(report, recs_path)

    return {
        "report": json_path,
        "csv": csv_path,
        "summary_figure": summary_path,
        "recommendations_figure": recs_path,
    }


def _summary_figure(report: EvaluationReport, path: Path) -> None:
    kinds = [kind for kind in SuggestionKind]
    counts = [report.summary.get(kind, 0) for kind in kinds]
    fig, ax = plt.subplots(figsize=(7, 3.5))
    ax.bar(range(len(kinds)), counts, color="#3b6ea5")
    ax.set_xticks(range(len(kinds)))
    ax.set_xticklabels([k.value.replace("_", "\n") for k in kinds], fontsize=8)
    ax.set_ylabel("suggestions")
    ax.set_title(f"Suggestion summary ({sum(counts)} total)")
    ax.yaxis.get_major_locator().set_params(integer=True)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def _recommendations_figure(report: EvaluationReport, path: Path) -> None:
    rows = [
        (f"{_location_text(s)}\n{s.original!r}", s.recommendations[0])
        for s in report.suggestions
        if s.recommendations
    ]
    fig, ax = plt.subplots(figsize=(7, max(2.5, 0.8 * len(rows) + 1)))
    if rows:
        labels = [label for label, _ in rows]
        supports = [rec.support for _, rec in rows]
        y = range(len(rows))
        ax.barh(y, supports, color="#4f9d69")
        ax.set_yticks(list(y))
        ax.set_yticklabels(labels, fontsize=7)
        ax.invert_yaxis()
        for yi, (_, rec) in zip(y, rows):
            ax.text(rec.support, yi, f" {rec.surface} ({rec.support})", va="center", fontsize=7)
        ax.set_xlabel("corpus support of top recommendation")
        ax.set_xlim(0, max(supports) * 1.6)
    else:
        ax.text(0.5, 0.5, "no field recommendations", ha="center", va="center")
        ax.set_axis_off()
    ax.set_title("Top recommendation per flagged field")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)

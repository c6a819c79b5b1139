"""Full evaluation of one profile against a corpus snapshot.

Two passes: cohort-based completeness (which checked sections are missing
that peers with the same cohort value usually fill) and per-field name
recommendations. Evaluation is a pure read over the snapshot, so the same
profile, snapshot, and config always produce an identical report.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field
from enum import Enum

from .corpus import CohortCriterion, CorpusSnapshot, GLOBAL_COHORT, profile_cohort_key
from .matcher import IssueKind, MatchParams, Recommendation, classify_issues, recommend
from .model import (
    SECTION_FIELDS,
    SECTION_ORDER,
    FieldKind,
    Profile,
    SectionKind,
    field_value,
    section_present,
)
from .textnorm import normalize

DEFAULT_CHECKED_KINDS = (
    SectionKind.EDUCATION,
    SectionKind.EXPERIENCE,
    SectionKind.AWARD,
    SectionKind.SKILL,
    SectionKind.CERTIFICATION,
    SectionKind.SUMMARY,
)


class SuggestionKind(str, Enum):
    SECTION_COMPLETENESS = "section_completeness"
    SPECIFICITY = "specificity"
    SPELLING = "spelling"
    CASING = "casing"
    AMBIGUITY = "ambiguity"


# One suggestion per field; when several issues apply the kind is picked in
# this order and the full flag set is kept in the rationale.
_FLAG_PRECEDENCE = (
    IssueKind.SPELLING,
    IssueKind.CASING,
    IssueKind.AMBIGUITY,
    IssueKind.SPECIFICITY,
)

_FLAG_TO_KIND = {
    IssueKind.SPELLING: SuggestionKind.SPELLING,
    IssueKind.CASING: SuggestionKind.CASING,
    IssueKind.AMBIGUITY: SuggestionKind.AMBIGUITY,
    IssueKind.SPECIFICITY: SuggestionKind.SPECIFICITY,
}


@dataclass(frozen=True)
class EvalConfig:
    completeness_threshold: float = 0.20
    cohort_criterion: CohortCriterion | None = None  # None: use the snapshot's
    checked_kinds: tuple[SectionKind, ...] = DEFAULT_CHECKED_KINDS
    match_params: MatchParams = dataclass_field(default_factory=MatchParams)

    def __post_init__(self):
        if not 0.0 <= self.completeness_threshold <= 1.0:
            raise ValueError("completeness_threshold must be in [0, 1]")

    def to_dict(self) -> dict:
        return {
            "completeness_threshold": self.completeness_threshold,
            "cohort_criterion": self.cohort_criterion.value if self.cohort_criterion else None,
            "checked_kinds": [k.value for k in self.checked_kinds],
            "match_params": self.match_params.to_dict(),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "EvalConfig":
        crit = d.get("cohort_criterion")
        return cls(
            completeness_threshold=d.get("completeness_threshold", 0.20),
            cohort_criterion=CohortCriterion(crit) if crit else None,
            checked_kinds=tuple(
                SectionKind(k) for k in d.get("checked_kinds", [k.value for k in DEFAULT_CHECKED_KINDS])
            ),
            match_params=MatchParams.from_dict(d.get("match_params", {})),
        )


@dataclass(frozen=True)
class SuggestionLocation:
    section: SectionKind
    instance: int | None = None  # None for section-level suggestions
    field: FieldKind | None = None


@dataclass(frozen=True)
class Suggestion:
    kind: SuggestionKind
    location: SuggestionLocation
    original: str  # "" for section completeness
    recommendations: tuple[Recommendation, ...]
    rationale: dict


@dataclass
class EvaluationReport:
    profile_ref: dict | str  # {"source": ..., "id": ...} or "ad-hoc"
    snapshot_digest: str
    config: dict
    summary: dict[SuggestionKind, int]
    suggestions: list[Suggestion]


def completeness_suggestions(
    s: CorpusSnapshot, p: Profile, cfg: EvalConfig | None = None
) -> list[Suggestion]:
    """Section-completeness suggestions for every checked kind the profile
    is missing but its cohort fills at a rate of at least the threshold.

    Cohorts smaller than the snapshot's n_min (including profiles whose
    cohort value cannot be derived) fall back to the global cohort.
    """
    c = cfg or EvalConfig()
    criterion = c.cohort_criterion or s.build_config.cohort_criterion
    cohort = profile_cohort_key(p, criterion)

    out = []
    for kind in SECTION_ORDER:
        if kind not in c.checked_kinds or section_present(p, kind):
            continue
        used = cohort
        rate, size = s.cohort_rate(cohort, kind) if cohort is not None else (0.0, 0)
        fell_back = False
        if size < s.build_config.n_min:
            used = GLOBAL_COHORT
            rate, size = s.cohort_rate(GLOBAL_COHORT, kind)
            fell_back = True
        if rate >= c.completeness_threshold:
            out.append(
                Suggestion(
                    kind=SuggestionKind.SECTION_COMPLETENESS,
                    location=SuggestionLocation(section=kind),
                    original="",
                    recommendations=(),
                    rationale={
                        "cohort_rate": rate,
                        "cohort_size": size,
                        "criterion": used.criterion.value,
                        "cohort_value": used.value,
                        "fell_back_to_global": fell_back,
                        "threshold": c.completeness_threshold,
                    },
                )
            )
    return out


def field_suggestions(
    s: CorpusSnapshot, p: Profile, cfg: EvalConfig | None = None
) -> list[Suggestion]:
    """At most one suggestion per non-blank recommendable field.

    A field is flagged only when classify_issues raises at least one issue
    and the recommendation list is non-empty (a flag with nothing to offer
    is not actionable).
    """
    c = cfg or EvalConfig()
    out = []
    for kind in SECTION_ORDER:
        fields = SECTION_FIELDS.get(kind)
        if not fields:
            continue
        for idx, entry in enumerate(p.sections.get(kind, [])):
            for fk in fields:
                value = field_value(entry, fk)
                if not value.strip() or not normalize(value):
                    continue
                recs = recommend(s, fk, value, c.match_params)
                flags = classify_issues(s, fk, value, recs, c.match_params)
                if not flags or not recs:
                    continue
                suggestion_kind = next(
                    _FLAG_TO_KIND[f] for f in _FLAG_PRECEDENCE if f in flags
                )
                out.append(
                    Suggestion(
                        kind=suggestion_kind,
                        location=SuggestionLocation(section=kind, instance=idx, field=fk),
                        original=value,
                        recommendations=tuple(recs),
                        rationale={
                            "flags": sorted(f.value for f in flags),
                            "key_support": s.key_support(fk, normalize(value)),
                        },
                    )
                )
    return out


_SECTION_RANK = {kind: i for i, kind in enumerate(SECTION_ORDER)}
_FIELD_RANK = {fk: i for i, fk in enumerate(FieldKind)}
_KIND_RANK = {kind: i for i, kind in enumerate(SuggestionKind)}


def _suggestion_sort_key(sug: Suggestion) -> tuple:
    loc = sug.location
    return (
        _SECTION_RANK[loc.section],
        -1 if loc.instance is None else loc.instance,
        -1 if loc.field is None else _FIELD_RANK[loc.field],
        _KIND_RANK[sug.kind],
    )


def evaluate(s: CorpusSnapshot, p: Profile, cfg: EvalConfig | None = None) -> EvaluationReport:
    """Run both passes and assemble the report.

    Suggestions are ordered by section, then instance, then field; the
    summary tallies the ordered list. The profile reference is "ad-hoc"
    unless the snapshot holds the same (source, id).
    """
    c = cfg or EvalConfig()
    suggestions = completeness_suggestions(s, p, c) + field_suggestions(s, p, c)
    suggestions.sort(key=_suggestion_sort_key)

    summary = {kind: 0 for kind in SuggestionKind}
    for sug in suggestions:
        summary[sug.kind] += 1

    stored = s.get_document(p.source, p.id) is not None
    ref: dict | str = {"source": p.source.value, "id": p.id} if stored else "ad-hoc"

    criterion = c.cohort_criterion or s.build_config.cohort_criterion
    config_echo = dict(c.to_dict())
    config_echo["cohort_criterion"] = criterion.value

    return EvaluationReport(
        profile_ref=ref,
        snapshot_digest=s.content_digest,
        config=config_echo,
        summary=summary,
        suggestions=suggestions,
    )

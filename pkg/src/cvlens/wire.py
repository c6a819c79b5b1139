"""Wire payloads shared by the CLI's structured output and the HTTP API.

The CLI prints exactly what the API returns (modulo the HTTP envelope), so
both go through these builders and one canonical JSON encoding.
"""

from __future__ import annotations

import json

from .corpus import CorpusSnapshot, ProfileMatch
from .evaluator import EvaluationReport, Suggestion
from .matcher import MatchParams, Recommendation, classify_issues, recommend
from .model import FieldKind


def canonical_json(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, indent=2) + "\n"


def recommendation_to_dict(r: Recommendation) -> dict:
    return {
        "surface": r.surface,
        "support": r.support,
        "match_class": r.match_class.value,
        "distance": r.distance,
    }


def suggestion_to_dict(sug: Suggestion) -> dict:
    return {
        "kind": sug.kind.value,
        "section": sug.location.section.value,
        "instance": sug.location.instance,
        "field": sug.location.field.value if sug.location.field else None,
        "original": sug.original,
        "recommendations": [recommendation_to_dict(r) for r in sug.recommendations],
        "rationale": sug.rationale,
    }


def report_to_dict(report: EvaluationReport) -> dict:
    return {
        "schema_version": 1,
        "profile": report.profile_ref,
        "snapshot_digest": report.snapshot_digest,
        "config": report.config,
        "summary": {kind.value: count for kind, count in report.summary.items()},
        "suggestions": [suggestion_to_dict(s) for s in report.suggestions],
    }


def match_to_dict(m: ProfileMatch) -> dict:
    return {
        "source": m.source.value,
        "id": m.id,
        "display_name": m.display_name,
        "headline": m.headline,
        "last_institution": m.last_institution,
    }


def search_payload(matches: list[ProfileMatch]) -> dict:
    return {"matches": [match_to_dict(m) for m in matches], "count": len(matches)}


def suggest_payload(
    s: CorpusSnapshot, fk: FieldKind, query: str, params: MatchParams
) -> dict:
    recs = recommend(s, fk, query, params)
    flags = classify_issues(s, fk, query, recs, params)
    return {
        "kind": fk.value,
        "query": query,
        "recommendations": [recommendation_to_dict(r) for r in recs],
        "issues": sorted(f.value for f in flags),
    }


def health_payload(s: CorpusSnapshot) -> dict:
    return {
        "status": "ok",
        "profile_count": s.profile_count,
        "snapshot_digest": s.content_digest,
    }


def error_payload(code: str, message: str) -> dict:
    return {"error": {"code": code, "message": message}}

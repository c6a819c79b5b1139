"""Profile data model and the profile document format.

A profile document is one self-contained JSON object (UTF-8); corpus files
hold one document per line. Top-level keys: schema_version (int, current 1),
id, source, basic, sections. Section kinds the model understands get typed
entries; unknown kinds are preserved as opaque payloads and survive a
parse/serialize round trip.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from .errors import MalformedDocument, SchemaViolation

SCHEMA_VERSION = 1

_YEAR_MONTH_RE = re.compile(r"^\d{4}(-(0[1-9]|1[0-2]))?$")


class SourceTag(str, Enum):
    PRIMARY_NETWORK = "primary_network"
    PARTNER_PLATFORM = "partner_platform"


class SectionKind(str, Enum):
    EDUCATION = "education"
    EXPERIENCE = "experience"
    AWARD = "award"
    SKILL = "skill"
    CERTIFICATION = "certification"
    SUMMARY = "summary"
    OTHER = "other"


SECTION_ORDER = list(SectionKind)


class FieldKind(str, Enum):
    DEGREE_NAME = "DegreeName"
    FIELD_OF_STUDY = "FieldOfStudy"
    JOB_TITLE = "JobTitle"
    SCHOOL_NAME = "SchoolName"
    ORGANIZATION_NAME = "OrganizationName"
    AWARD_TITLE = "AwardTitle"


# FieldKind -> (section it lives in, entry attribute)
FIELD_LOCATION: dict[FieldKind, tuple[SectionKind, str]] = {
    FieldKind.SCHOOL_NAME: (SectionKind.EDUCATION, "school_name"),
    FieldKind.DEGREE_NAME: (SectionKind.EDUCATION, "degree_name"),
    FieldKind.FIELD_OF_STUDY: (SectionKind.EDUCATION, "field_of_study"),
    FieldKind.JOB_TITLE: (SectionKind.EXPERIENCE, "title"),
    FieldKind.ORGANIZATION_NAME: (SectionKind.EXPERIENCE, "organization_name"),
    FieldKind.AWARD_TITLE: (SectionKind.AWARD, "title"),
}

# Per-section field evaluation order (document order within an instance).
SECTION_FIELDS: dict[SectionKind, list[FieldKind]] = {
    SectionKind.EDUCATION: [
        FieldKind.SCHOOL_NAME,
        FieldKind.DEGREE_NAME,
        FieldKind.FIELD_OF_STUDY,
    ],
    SectionKind.EXPERIENCE: [FieldKind.JOB_TITLE, FieldKind.ORGANIZATION_NAME],
    SectionKind.AWARD: [FieldKind.AWARD_TITLE],
}


@dataclass(frozen=True)
class BasicInfo:
    first_name: str
    last_name: str
    headline: str | None = None
    location: str | None = None


@dataclass(frozen=True)
class EducationEntry:
    school_name: str = ""
    degree_name: str = ""
    field_of_study: str | None = None
    start_year: int | None = None
    end_year: int | None = None


@dataclass(frozen=True)
class ExperienceEntry:
    title: str = ""
    organization_name: str = ""
    start: str | None = None  # "YYYY" or "YYYY-MM"
    end: str | None = None
    description: str | None = None


@dataclass(frozen=True)
class AwardEntry:
    title: str = ""
    issuer: str | None = None
    year: int | None = None


@dataclass(frozen=True)
class SkillEntry:
    name: str = ""


@dataclass(frozen=True)
class CertificationEntry:
    name: str = ""
    year: int | None = None


@dataclass(frozen=True)
class SummaryEntry:
    text: str = ""


@dataclass(frozen=True)
class OtherEntry:
    """An instance of a section kind the model does not understand.

    `label` is the original section key; `raw` is the instance payload as
    canonical JSON text, reproduced verbatim on serialization.
    """

    label: str
    raw: str


@dataclass
class Profile:
    id: str
    source: SourceTag
    basic: BasicInfo
    sections: dict[SectionKind, list] = field(default_factory=dict)
    # How many fully-blank instances the parser dropped. Not part of the
    # profile's identity, so excluded from equality.
    parse_warnings: int = field(default=0, compare=False)


def _canonical_json(value: Any) -> str:
    return json.dumps(value, ensure_ascii=False, sort_keys=True, separators=(",", ":"))


def _blank(v: Any) -> bool:
    return v is None or (isinstance(v, str) and not v.strip())


def _opt_str(obj: dict, key: str, where: str) -> str | None:
    v = obj.get(key)
    if v is None:
        return None
    if not isinstance(v, str):
        raise SchemaViolation(f"{where}.{key} must be a string")
    return v

def _req_str(obj: dict, key: str, where: str) -> str:
    v = _opt_str(obj, key, where)
    return "" if v is None else v


def _opt_year(obj: dict, key: str, where: str) -> int | None:
    v = obj.get(key)
    if v is None:
        return None
    if not isinstance(v, int) or isinstance(v, bool):
        raise SchemaViolation(f"{where}.{key} must be an integer year")
    return v


def _opt_year_month(obj: dict, key: str, where: str) -> str | None:
    v = _opt_str(obj, key, where)
    if v is not None and not _YEAR_MONTH_RE.match(v):
        raise SchemaViolation(f"{where}.{key} must look like YYYY or YYYY-MM")
    return v


def _parse_education(obj: dict, where: str) -> EducationEntry:
    return EducationEntry(
        school_name=_req_str(obj, "school_name", where),
        degree_name=_req_str(obj, "degree_name", where),
        field_of_study=_opt_str(obj, "field_of_study", where),
        start_year=_opt_year(obj, "start_year", where),
        end_year=_opt_year(obj, "end_year", where),
    )


def _parse_experience(obj: dict, where: str) -> ExperienceEntry:
    return ExperienceEntry(
        title=_req_str(obj, "title", where),
        organization_name=_req_str(obj, "organization_name", where),
        start=_opt_year_month(obj, "start", where),
        end=_opt_year_month(obj, "end", where),
        description=_opt_str(obj, "description", where),
    )


def _parse_award(obj: dict, where: str) -> AwardEntry:
    return AwardEntry(
        title=_req_str(obj, "title", where),
        issuer=_opt_str(obj, "issuer", where),
        year=_opt_year(obj, "year", where),
    )


def _entry_is_blank(kind: SectionKind, entry: Any) -> bool:
    if kind == SectionKind.EDUCATION:
        return _blank(entry.school_name) and _blank(entry.degree_name)
    if kind == SectionKind.EXPERIENCE:
        return _blank(entry.title) and _blank(entry.organization_name)
    if kind == SectionKind.AWARD:
        return _blank(entry.title)
    if kind == SectionKind.SKILL:
        return _blank(entry.name)
    if kind == SectionKind.CERTIFICATION:
        return _blank(entry.name)
    if kind == SectionKind.SUMMARY:
        return _blank(entry.text)
    return False


def _education_sort_key(indexed: tuple[int, EducationEntry]) -> tuple:
    idx, entry = indexed
    if entry.end_year is None:
        return (1, 0, idx)
    return (0, -entry.end_year, idx)


def parse_profile(doc: str) -> Profile:
    """Parse one profile document.

    Raises MalformedDocument when the text is not a JSON object, and
    SchemaViolation when the object does not fit the profile schema.
    Fully-blank instances are dropped and counted in parse_warnings;
    education entries come out ordered by end_year descending (entries
    without a year after those with one, original order preserved on ties).
    """
    try:
        data = json.loads(doc)
    except (json.JSONDecodeError, TypeError) as exc:
        raise MalformedDocument(f"not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise MalformedDocument("profile document must be a JSON object")

    version = data.get("schema_version", SCHEMA_VERSION)
    if version != SCHEMA_VERSION:
        raise SchemaViolation(f"unsupported schema_version {version!r}")

    pid = data.get("id")
    if not isinstance(pid, str) or not pid:
        raise SchemaViolation("id must be a non-empty string")

    source_raw = data.get("source")
    try:
        source = SourceTag(source_raw)
    except ValueError:
        raise SchemaViolation(f"unknown source {source_raw!r}") from None

    basic_raw = data.get("basic")
    if not isinstance(basic_raw, dict):
        raise SchemaViolation("basic must be an object")
    first = basic_raw.get("first_name")
    last = basic_raw.get("last_name")
    if not isinstance(first, str) or not first.strip():
        raise SchemaViolation("basic.first_name must be a non-empty string")
    if not isinstance(last, str) or not last.strip():
        raise SchemaViolation("basic.last_name must be a non-empty string")
    basic = BasicInfo(
        first_name=first,
        last_name=last,
        headline=_opt_str(basic_raw, "headline", "basic"),
        location=_opt_str(basic_raw, "location", "basic"),
    )

    sections_raw = data.get("sections", {})
    if not isinstance(sections_raw, dict):
        raise SchemaViolation("sections must be an object")

    typed_parsers = {
        SectionKind.EDUCATION: _parse_education,
        SectionKind.EXPERIENCE: _parse_experience,
        SectionKind.AWARD: _parse_award,
    }

    sections: dict[SectionKind, list] = {}
    warnings = 0
    for key, instances in sections_raw.items():
        if not isinstance(instances, list):
            raise SchemaViolation(f"sections.{key} must be a list")
        try:
            kind = SectionKind(key)
        except ValueError:
            kind = SectionKind.OTHER
        entries = []
        for i, inst in enumerate(instances):
            where = f"sections.{key}[{i}]"
            if kind == SectionKind.OTHER:
                if inst is None or inst == "" or inst == {} or inst == []:
                    warnings += 1
                    continue
                entries.append(OtherEntry(label=key, raw=_canonical_json(inst)))
                continue
            if not isinstance(inst, dict):
                raise SchemaViolation(f"{where} must be an object")
            if kind in typed_parsers:
                entry = typed_parsers[kind](inst, where)
            elif kind == SectionKind.SKILL:
                entry = SkillEntry(name=_req_str(inst, "name", where))
            elif kind == SectionKind.CERTIFICATION:
                entry = CertificationEntry(
                    name=_req_str(inst, "name", where),
                    year=_opt_year(inst, "year", where),
                )
            else:
                entry = SummaryEntry(text=_req_str(inst, "text", where))
            if _entry_is_blank(kind, entry):
                warnings += 1
                continue
            entries.append(entry)
        if entries:
            sections.setdefault(kind, []).extend(entries)

    if SectionKind.EDUCATION in sections:
        indexed = list(enumerate(sections[SectionKind.EDUCATION]))
        indexed.sort(key=_education_sort_key)
        sections[SectionKind.EDUCATION] = [e for _, e in indexed]

    return Profile(id=pid, source=source, basic=basic, sections=sections, parse_warnings=warnings)


def _education_to_dict(e: EducationEntry) -> dict:
    out: dict[str, Any] = {"school_name": e.school_name, "degree_name": e.degree_name}
    if e.field_of_study is not None:
        out["field_of_study"] = e.field_of_study
    if e.start_year is not None:
        out["start_year"] = e.start_year
    if e.end_year is not None:
        out["end_year"] = e.end_year
    return out


def _experience_to_dict(e: ExperienceEntry) -> dict:
    out: dict[str, Any] = {"title": e.title, "organization_name": e.organization_name}
    if e.start is not None:
        out["start"] = e.start
    if e.end is not None:
        out["end"] = e.end
    if e.description is not None:
        out["description"] = e.description
    return out


def _award_to_dict(e: AwardEntry) -> dict:
    out: dict[str, Any] = {"title": e.title}
    if e.issuer is not None:
        out["issuer"] = e.issuer
    if e.year is not None:
        out["year"] = e.year
    return out


def profile_to_dict(p: Profile) -> dict:
    """Build the document object for a profile (see parse_profile)."""
    basic: dict[str, Any] = {
        "first_name": p.basic.first_name,
        "last_name": p.basic.last_name,
    }
    if p.basic.headline is not None:
        basic["headline"] = p.basic.headline
    if p.basic.location is not None:
        basic["location"] = p.basic.location

    sections: dict[str, list] = {}
    for kind in SECTION_ORDER:
        entries = p.sections.get(kind, [])
        if not entries:
            continue
        if kind == SectionKind.OTHER:
            # Group by original label, preserving instance order.
            for entry in entries:
                sections.setdefault(entry.label, []).append(json.loads(entry.raw))
            continue
        out_list: list[Any] = []
        for entry in entries:
            if kind == SectionKind.EDUCATION:
                out_list.append(_education_to_dict(entry))
            elif kind == SectionKind.EXPERIENCE:
                out_list.append(_experience_to_dict(entry))
            elif kind == SectionKind.AWARD:
                out_list.append(_award_to_dict(entry))
            elif kind == SectionKind.SKILL:
                out_list.append({"name": entry.name})
            elif kind == SectionKind.CERTIFICATION:
                item: dict[str, Any] = {"name": entry.name}
                if entry.year is not None:
                    item["year"] = entry.year
                out_list.append(item)
            else:
                out_list.append({"text": entry.text})
        sections[kind.value] = out_list

    return {
        "schema_version": SCHEMA_VERSION,
        "id": p.id,
        "source": p.source.value,
        "basic": basic,
        "sections": sections,
    }


def serialize_profile(p: Profile) -> str:
    """Serialize a profile to a single-line document; inverse of parse_profile."""
    return json.dumps(profile_to_dict(p), ensure_ascii=False, separators=(", ", ": "))


def section_present(p: Profile, kind: SectionKind) -> bool:
    """True iff the profile has at least one (non-blank) instance of `kind`."""
    return bool(p.sections.get(kind))


def last_education(p: Profile) -> EducationEntry | None:
    """The education entry with the greatest end_year; first listed wins
    ties, and when no entry carries a year the first listed entry is used."""
    entries = p.sections.get(SectionKind.EDUCATION)
    if not entries:
        return None
    best = None
    best_year = None
    for entry in entries:
        if entry.end_year is None:
            continue
        if best_year is None or entry.end_year > best_year:
            best, best_year = entry, entry.end_year
    return best if best is not None else entries[0]


def field_value(entry: Any, fk: FieldKind) -> str:
    """The surface value an entry holds for a field, "" when absent."""
    _, attr = FIELD_LOCATION[fk]
    value = getattr(entry, attr, None)
    return value if isinstance(value, str) else ""

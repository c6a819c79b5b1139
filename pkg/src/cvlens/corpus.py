"""Immutable corpus index: build, query, persist.

Ingestion parses profile documents once and folds them into per-field
frequency maps (byte-exact surface counts grouped under normalized keys,
with a character-trigram lookup structure), cohort section-presence
statistics, a person-name search index, and a raw document store for
profile retrieval. The result is a snapshot: read-only, deterministic for
identical input bytes and configuration, and safe to share across threads.
"""

from __future__ import annotations

import hashlib
import json
import struct
import zlib
from bisect import bisect_right
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable

from .errors import (
    DigestMismatch,
    EmptyCorpus,
    IoFailure,
    MalformedDocument,
    SchemaViolation,
    VersionMismatch,
)
from .model import (
    FIELD_LOCATION,
    FieldKind,
    Profile,
    SectionKind,
    SourceTag,
    field_value,
    last_education,
    parse_profile,
)
from .textnorm import dl_distance, normalize, trigrams

SNAPSHOT_MAGIC = b"CVLENS-SNAPSHOT\x00"
SNAPSHOT_FORMAT_VERSION = 1

# A single Damerau-Levenshtein edit can remove at most 4 distinct trigrams
# from a key (adjacent transposition touches 4 overlapping grams), so keys
# with more than 4*max_dist grams always share a gram with any query within
# max_dist and are found through the postings. Keys at or below the bound
# are checked exhaustively.
_GRAMS_DESTROYED_PER_EDIT = 4


class CohortCriterion(str, Enum):
    LAST_SCHOOL = "last_school"
    DEGREE_LEVEL = "degree_level"
    GLOBAL = "global"


@dataclass(frozen=True)
class CohortKey:
    criterion: CohortCriterion
    value: str = ""  # empty for the Global pseudo-cohort


GLOBAL_COHORT = CohortKey(CohortCriterion.GLOBAL, "")

_DOCTORATE_WORDS = frozenset({"phd", "doctorate", "doctor", "dphil", "edd", "dba"})
_MASTER_WORDS = frozenset({"master", "masters", "msc", "mba", "ma", "meng", "mphil", "ms", "mtech"})
_BACHELOR_WORDS = frozenset({"bachelor", "bachelors", "bsc", "ba", "beng", "bs", "bba", "btech", "llb"})


def degree_level(degree_name: str) -> str:
    """Bucket a degree name into bachelor / master / doctorate / other by
    keyword match on its normalized tokens."""
    toks = set(normalize(degree_name).split())
    if toks & _DOCTORATE_WORDS:
        return "doctorate"
    if toks & _MASTER_WORDS:
        return "master"
    if toks & _BACHELOR_WORDS:
        return "bachelor"
    return "other"


def profile_cohort_key(p: Profile, criterion: CohortCriterion) -> CohortKey | None:
    """The cohort a profile belongs to under a criterion, or None when the
    profile lacks the material to derive one (no education)."""
    if criterion == CohortCriterion.GLOBAL:
        return GLOBAL_COHORT
    last = last_education(p)
    if last is None:
        return None
    if criterion == CohortCriterion.LAST_SCHOOL:
        key = normalize(last.school_name)
        return CohortKey(criterion, key) if key else None
    return CohortKey(criterion, degree_level(last.degree_name))


@dataclass(frozen=True)
class BuildConfig:
    cohort_criterion: CohortCriterion = CohortCriterion.LAST_SCHOOL
    n_min: int = 50
    trigram_pad: str = "#"

    def __post_init__(self):
        if self.n_min < 1:
            raise ValueError("n_min must be >= 1")
        if len(self.trigram_pad) != 1:
            raise ValueError("trigram_pad must be a single character")

    def to_dict(self) -> dict:
        return {
            "cohort_criterion": self.cohort_criterion.value,
            "n_min": self.n_min,
            "trigram_pad": self.trigram_pad,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "BuildConfig":
        return cls(
            cohort_criterion=CohortCriterion(d["cohort_criterion"]),
            n_min=d["n_min"],
            trigram_pad=d["trigram_pad"],
        )


@dataclass
class FrequencyIndex:
    """Per-field surface-form counts plus derived lookup structures.

    Only `surface_support` is authoritative; everything else is rebuilt
    from it deterministically (and therefore excluded from equality).
    """

    surface_support: dict[str, int]
    trigram_pad: str = "#"
    key_variants: dict[str, list[tuple[str, int]]] = field(default_factory=dict, compare=False)
    trigram_postings: dict[str, set[str]] = field(default_factory=dict, compare=False)
    _keys_by_gram_count: list[tuple[int, str]] = field(default_factory=list, compare=False)

    @classmethod
    def from_surface_counts(cls, counts: dict[str, int], trigram_pad: str = "#") -> "FrequencyIndex":
        idx = cls(surface_support=dict(counts), trigram_pad=trigram_pad)
        idx._rebuild()
        return idx

    def _rebuild(self) -> None:
        grouped: dict[str, list[tuple[str, int]]] = defaultdict(list)
        for surface, count in self.surface_support.items():
            grouped[normalize(surface)].append((surface, count))
        self.key_variants = {}
        for key in sorted(grouped):
            self.key_variants[key] = sorted(grouped[key], key=lambda sc: (-sc[1], sc[0]))
        self.trigram_postings = defaultdict(set)
        by_gram_count = []
        for key in self.key_variants:
            grams = trigrams(key, self.trigram_pad)
            for g in grams:
                self.trigram_postings[g].add(key)
            by_gram_count.append((len(grams), key))
        self.trigram_postings = dict(self.trigram_postings)
        self._keys_by_gram_count = sorted(by_gram_count)

    def support(self, surface: str) -> int:
        return self.surface_support.get(surface, 0)

    def variants(self, key: str) -> list[tuple[str, int]]:
        return list(self.key_variants.get(key, []))

    def key_support(self, key: str) -> int:
        return sum(count for _, count in self.key_variants.get(key, []))

    def fuzzy_lookup(self, key: str, max_dist: int) -> list[str]:
        """All indexed keys within Damerau-Levenshtein distance max_dist.

        Trigram postings prefilter plus an exhaustive check of keys sparse
        enough to evade it; equivalent to a full scan, just faster.
        """
        candidates = set()
        for g in trigrams(key, self.trigram_pad):
            candidates.update(self.trigram_postings.get(g, ()))
        bound = _GRAMS_DESTROYED_PER_EDIT * max_dist
        cut = bisect_right(self._keys_by_gram_count, (bound, "\U0010ffff"))
        candidates.update(k for _, k in self._keys_by_gram_count[:cut])

        hits = []
        for cand in candidates:
            if abs(len(cand) - len(key)) > max_dist:
                continue
            d = dl_distance(key, cand)
            if d <= max_dist:
                hits.append((d, cand))
        return [cand for _, cand in sorted(hits)]


@dataclass
class CohortStats:
    """Cohort sizes and per-section presence counts, per criterion."""

    sizes: dict[CohortCriterion, dict[str, int]] = field(default_factory=dict)
    presence: dict[CohortCriterion, dict[str, dict[SectionKind, int]]] = field(default_factory=dict)

    def add_profile(self, keys: list[CohortKey], present_kinds: set[SectionKind]) -> None:
        for ck in keys:
            sizes = self.sizes.setdefault(ck.criterion, {})
            sizes[ck.value] = sizes.get(ck.value, 0) + 1
            per_value = self.presence.setdefault(ck.criterion, {}).setdefault(ck.value, {})
            for kind in present_kinds:
                per_value[kind] = per_value.get(kind, 0) + 1

    def rate(self, cohort: CohortKey, kind: SectionKind) -> tuple[float, int]:
        size = self.sizes.get(cohort.criterion, {}).get(cohort.value, 0)
        if size == 0:
            return (0.0, 0)
        count = self.presence.get(cohort.criterion, {}).get(cohort.value, {}).get(kind, 0)
        return (count / size, size)


@dataclass(frozen=True)
class NameIndexEntry:
    source: SourceTag
    id: str
    display_name: str
    headline: str | None
    last_school_key: str | None
    last_school_display: str | None


@dataclass(frozen=True)
class ProfileMatch:
    source: SourceTag
    id: str
    display_name: str
    headline: str | None
    last_institution: str | None


_SOURCE_RANK = {SourceTag.PRIMARY_NETWORK: 0, SourceTag.PARTNER_PLATFORM: 1}


@dataclass
class CorpusSnapshot:
    profile_count: int
    parse_failures: int
    parse_warnings: int
    duplicates: int
    field_index: dict[FieldKind, FrequencyIndex]
    cohort_stats: CohortStats
    name_index: dict[tuple[str, str], list[NameIndexEntry]]
    documents: dict[tuple[str, str], str]  # (source value, id) -> original doc line
    build_config: BuildConfig
    content_digest: str

    def support(self, fk: FieldKind, surface: str) -> int:
        """Byte-exact occurrence count of a surface form; 0 when absent."""
        return self.field_index[fk].support(surface)

    def variants(self, fk: FieldKind, key: str) -> list[tuple[str, int]]:
        """Surface forms sharing a normalized key, support-descending with
        a lexicographic tiebreak. `key` must already be normalized."""
        return self.field_index[fk].variants(key)

    def key_support(self, fk: FieldKind, key: str) -> int:
        return self.field_index[fk].key_support(key)

    def fuzzy_candidates(self, fk: FieldKind, key: str, max_dist: int) -> list[str]:
        """Indexed keys within Damerau-Levenshtein distance max_dist of an
        already-normalized key, nearest first."""
        if not 1 <= max_dist <= 3:
            raise ValueError("max_dist must be in [1, 3]")
        return self.field_index[fk].fuzzy_lookup(key, max_dist)

    def cohort_rate(self, cohort: CohortKey, kind: SectionKind) -> tuple[float, int]:
        """(presence rate, cohort size); (0.0, 0) for an unknown cohort."""
        return self.cohort_stats.rate(cohort, kind)

    def search_profiles(
        self, first: str, last: str, institution: str | None = None
    ) -> list[ProfileMatch]:
        """Profiles matching a name exactly (case-insensitive, normalized),
        optionally narrowed to those whose last-graduated institution key
        contains every normalized token of `institution`."""
        entries = self.name_index.get((normalize(first), normalize(last)), [])
        if institution:
            inst_tokens = normalize(institution).split()
            entries = [
                e
                for e in entries
                if e.last_school_key is not None
                and all(tok in e.last_school_key for tok in inst_tokens)
            ]
        entries = sorted(entries, key=lambda e: (_SOURCE_RANK[e.source], e.id))
        return [
            ProfileMatch(
                source=e.source,
                id=e.id,
                display_name=e.display_name,
                headline=e.headline,
                last_institution=e.last_school_display,
            )
            for e in entries
        ]

    def get_document(self, source: SourceTag, pid: str) -> str | None:
        return self.documents.get((source.value, pid))

    def get_profile(self, source: SourceTag, pid: str) -> Profile | None:
        doc = self.get_document(source, pid)
        return parse_profile(doc) if doc is not None else None


def _display_name(p: Profile) -> str:
    return f"{p.basic.first_name} {p.basic.last_name}"


def ingest(docs: Iterable[str], config: BuildConfig | None = None) -> CorpusSnapshot:
    """Build a snapshot from profile document texts.

    Documents that fail to parse are counted and skipped; duplicate
    (source, id) pairs keep the first occurrence. Raises EmptyCorpus when
    nothing parses.
    """
    cfg = config or BuildConfig()
    hasher = hashlib.sha256()

    counts: dict[FieldKind, Counter] = {fk: Counter() for fk in FieldKind}
    stats = CohortStats()
    name_index: dict[tuple[str, str], list[NameIndexEntry]] = {}
    documents: dict[tuple[str, str], str] = {}
    failures = 0
    warnings = 0
    duplicates = 0

    for doc in docs:
        hasher.update(doc.encode("utf-8"))
        hasher.update(b"\n")
        try:
            profile = parse_profile(doc)
        except (MalformedDocument, SchemaViolation):
            failures += 1
            continue
        doc_key = (profile.source.value, profile.id)
        if doc_key in documents:
            duplicates += 1
            continue
        warnings += profile.parse_warnings
        documents[doc_key] = doc

        for fk, (section, _) in FIELD_LOCATION.items():
            for entry in profile.sections.get(section, []):
                value = field_value(entry, fk)
                if value.strip():
                    counts[fk][value] += 1

        cohort_keys = [GLOBAL_COHORT]
        for criterion in (CohortCriterion.LAST_SCHOOL, CohortCriterion.DEGREE_LEVEL):
            ck = profile_cohort_key(profile, criterion)
            if ck is not None:
                cohort_keys.append(ck)
        stats.add_profile(cohort_keys, set(profile.sections.keys()))

        last = last_education(profile)
        school_key = None
        school_display = None
        if last is not None and last.school_name.strip():
            school_key = normalize(last.school_name)
            school_display = last.school_name
        entry = NameIndexEntry(
            source=profile.source,
            id=profile.id,
            display_name=_display_name(profile),
            headline=profile.basic.headline,
            last_school_key=school_key,
            last_school_display=school_display,
        )
        name_index.setdefault(
            (normalize(profile.basic.first_name), normalize(profile.basic.last_name)), []
        ).append(entry)

    if not documents:
        raise EmptyCorpus(f"no parseable profiles in corpus ({failures} failures)")

    hasher.update(json.dumps(cfg.to_dict(), sort_keys=True).encode("utf-8"))

    field_index = {
        fk: FrequencyIndex.from_surface_counts(dict(counts[fk]), cfg.trigram_pad)
        for fk in FieldKind
    }
    for entries in name_index.values():
        entries.sort(key=lambda e: (_SOURCE_RANK[e.source], e.id))

    return CorpusSnapshot(
        profile_count=len(documents),
        parse_failures=failures,
        parse_warnings=warnings,
        duplicates=duplicates,
        field_index=field_index,
        cohort_stats=stats,
        name_index=name_index,
        documents=documents,
        build_config=cfg,
        content_digest=hasher.hexdigest(),
    )


def _snapshot_records(s: CorpusSnapshot) -> list[bytes]:
    meta = {
        "profile_count": s.profile_count,
        "parse_failures": s.parse_failures,
        "parse_warnings": s.parse_warnings,
        "duplicates": s.duplicates,
        "content_digest": s.content_digest,
    }
    fields = {
        fk.value: dict(sorted(s.field_index[fk].surface_support.items())) for fk in FieldKind
    }
    cohorts = {
        "sizes": {
            crit.value: dict(sorted(values.items()))
            for crit, values in sorted(s.cohort_stats.sizes.items(), key=lambda kv: kv[0].value)
        },
        "presence": {
            crit.value: {
                value: {kind.value: n for kind, n in sorted(kinds.items(), key=lambda kv: kv[0].value)}
                for value, kinds in sorted(values.items())
            }
            for crit, values in sorted(s.cohort_stats.presence.items(), key=lambda kv: kv[0].value)
        },
    }
    names = [
        {
            "first": first,
            "last": last,
            "entries": [
                {
                    "source": e.source.value,
                    "id": e.id,
                    "display_name": e.display_name,
                    "headline": e.headline,
                    "last_school_key": e.last_school_key,
                    "last_school_display": e.last_school_display,
                }
                for e in entries
            ],
        }
        for (first, last), entries in sorted(s.name_index.items())
    ]
    documents = [[src, pid, doc] for (src, pid), doc in sorted(s.documents.items())]
    parts = [meta, s.build_config.to_dict(), fields, cohorts, names, documents]
    return [json.dumps(part, ensure_ascii=False, sort_keys=True).encode("utf-8") for part in parts]


def save_snapshot(s: CorpusSnapshot, path) -> None:
    """Write a snapshot file: magic, format version, payload digest, then
    length-prefixed compressed records."""
    payload = bytearray()
    for record in _snapshot_records(s):
        compressed = zlib.compress(record, 6)
        payload.extend(struct.pack(">I", len(compressed)))
        payload.extend(compressed)
    digest = hashlib.sha256(bytes(payload)).digest()
    try:
        with open(path, "wb") as fh:
            fh.write(SNAPSHOT_MAGIC)
            fh.write(struct.pack(">H", SNAPSHOT_FORMAT_VERSION))
            fh.write(digest)
            fh.write(payload)
    except OSError as exc:
        raise IoFailure(f"cannot write snapshot {path}: {exc}") from exc


def load_snapshot(path) -> CorpusSnapshot:
    """Read a snapshot file back; inverse of save_snapshot."""
    try:
        with open(path, "rb") as fh:
            blob = fh.read()
    except OSError as exc:
        raise IoFailure(f"cannot read snapshot {path}: {exc}") from exc

    header_len = len(SNAPSHOT_MAGIC) + 2 + 32
    if len(blob) < header_len or not blob.startswith(SNAPSHOT_MAGIC):
        raise IoFailure(f"{path} is not a snapshot file")
    (version,) = struct.unpack_from(">H", blob, len(SNAPSHOT_MAGIC))
    if version != SNAPSHOT_FORMAT_VERSION:
        raise VersionMismatch(f"snapshot format version {version} unsupported")
    stored = blob[len(SNAPSHOT_MAGIC) + 2 : header_len]
    payload = blob[header_len:]
    if hashlib.sha256(payload).digest() != stored:
        raise DigestMismatch(f"{path} is corrupt: payload digest mismatch")

    records = []
    offset = 0
    while offset < len(payload):
        (length,) = struct.unpack_from(">I", payload, offset)
        offset += 4
        records.append(json.loads(zlib.decompress(payload[offset : offset + length])))
        offset += length
    if len(records) != 6:
        raise DigestMismatch(f"{path}: unexpected record count {len(records)}")

    meta, cfg_raw, fields, cohorts, names, documents_raw = records
    cfg = BuildConfig.from_dict(cfg_raw)
    field_index = {
        fk: FrequencyIndex.from_surface_counts(fields.get(fk.value, {}), cfg.trigram_pad)
        for fk in FieldKind
    }
    stats = CohortStats(
        sizes={
            CohortCriterion(crit): dict(values) for crit, values in cohorts["sizes"].items()
        },
        presence={
            CohortCriterion(crit): {
                value: {SectionKind(kind): n for kind, n in kinds.items()}
                for value, kinds in values.items()
            }
            for crit, values in cohorts["presence"].items()
        },
    )
    name_index = {
        (group["first"], group["last"]): [
            NameIndexEntry(
                source=SourceTag(e["source"]),
                id=e["id"],
                display_name=e["display_name"],
                headline=e["headline"],
                last_school_key=e["last_school_key"],
                last_school_display=e["last_school_display"],
            )
            for e in group["entries"]
        ]
        for group in names
    }
    documents = {(src, pid): doc for src, pid, doc in documents_raw}

    return CorpusSnapshot(
        profile_count=meta["profile_count"],
        parse_failures=meta["parse_failures"],
        parse_warnings=meta["parse_warnings"],
        duplicates=meta["duplicates"],
        field_index=field_index,
        cohort_stats=stats,
        name_index=name_index,
        documents=documents,
        build_config=cfg,
        content_digest=meta["content_digest"],
    )

"""Ranked name recommendations and issue classification for one field value.

Candidates come from three routes against the corpus index, in priority
order: other surface forms under the query's own normalized key, expansions
of the query key, and keys within a length-scaled Damerau-Levenshtein
budget. Corpus usage is authoritative for ranking; the issue flags say why
the top candidates are worth showing.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .corpus import CorpusSnapshot
from .errors import EmptyQuery
from .model import FieldKind
from .textnorm import dl_distance, expansion_match, normalize


class MatchClass(str, Enum):
    EXACT_KEY = "exact_key"
    EXPANSION = "expansion"
    FUZZY = "fuzzy"

    @property
    def priority(self) -> int:
        return _CLASS_PRIORITY[self]


_CLASS_PRIORITY = {MatchClass.EXACT_KEY: 0, MatchClass.EXPANSION: 1, MatchClass.FUZZY: 2}


class IssueKind(str, Enum):
    SPECIFICITY = "specificity"
    SPELLING = "spelling"
    CASING = "casing"
    AMBIGUITY = "ambiguity"


@dataclass(frozen=True)
class Recommendation:
    surface: str
    support: int
    match_class: MatchClass
    distance: int = 0  # 0 unless match_class is FUZZY


@dataclass(frozen=True)
class MatchParams:
    k: int = 3
    s_min: int = 5
    ambiguity_ratio: float = 3.0

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be >= 1")
        if self.s_min < 1:
            raise ValueError("s_min must be >= 1")
        if self.ambiguity_ratio <= 1:
            raise ValueError("ambiguity_ratio must be > 1")

    @staticmethod
    def max_dist_for(key_len: int) -> int:
        """Distance budget by key length; short keys get a tight budget so
        they do not match half the index."""
        if key_len <= 4:
            return 1
        if key_len <= 8:
            return 2
        return 3

    def to_dict(self) -> dict:
        return {"k": self.k, "s_min": self.s_min, "ambiguity_ratio": self.ambiguity_ratio}

    @classmethod
    def from_dict(cls, d: dict) -> "MatchParams":
        return cls(
            k=d.get("k", 3),
            s_min=d.get("s_min", 5),
            ambiguity_ratio=d.get("ambiguity_ratio", 3.0),
        )


# Fields whose values designate real-world entities; only these can be
# ambiguous in the "several distinct things share this name" sense.
ENTITY_FIELDS = frozenset({FieldKind.SCHOOL_NAME, FieldKind.ORGANIZATION_NAME})

# Fields where a lowercase word is worth flagging even when the corpus has
# never seen the key.
_CASED_FIELDS = frozenset(
    {FieldKind.SCHOOL_NAME, FieldKind.ORGANIZATION_NAME, FieldKind.JOB_TITLE, FieldKind.DEGREE_NAME}
)

CASING_STOPWORDS = frozenset({"of", "and", "the", "for", "in", "at", "on", "de"})


def recommend(
    s: CorpusSnapshot, fk: FieldKind, query: str, params: MatchParams | None = None
) -> list[Recommendation]:
    """Top-k corpus-backed recommendations for a field value.

    Deterministic order: match class, then support descending, then surface
    form. Candidates below the support floor and the query itself are
    dropped; raises EmptyQuery for blank queries (including values that
    normalize to the empty key).
    """
    p = params or MatchParams()
    qkey = normalize(query)
    if not query.strip() or not qkey:
        raise EmptyQuery(f"cannot recommend for blank query {query!r}")
    idx = s.field_index[fk]
    budget = p.max_dist_for(len(qkey))

    # surface -> (class, support, distance); a higher-priority class wins
    found: dict[str, tuple[MatchClass, int, int]] = {}

    def offer(surface: str, support: int, cls: MatchClass, distance: int) -> None:
        slot = found.get(surface)
        if slot is None or cls.priority < slot[0].priority:
            found[surface] = (cls, support, distance)

    for surface, support in idx.variants(qkey):
        offer(surface, support, MatchClass.EXACT_KEY, 0)
    for ckey in idx.key_variants:
        if expansion_match(qkey, ckey):
            for surface, support in idx.key_variants[ckey]:
                offer(surface, support, MatchClass.EXPANSION, 0)
    for ckey in idx.fuzzy_lookup(qkey, budget):
        if ckey == qkey:
            continue
        dist = dl_distance(qkey, ckey)
        for surface, support in idx.key_variants[ckey]:
            offer(surface, support, MatchClass.FUZZY, dist)

    kept = [
        (cls.priority, -support, surface, cls, dist)
        for surface, (cls, support, dist) in found.items()
        if support >= p.s_min and surface != query
    ]
    kept.sort(key=lambda item: item[:3])
    return [
        Recommendation(
            surface=surface,
            support=-neg_support,
            match_class=cls,
            distance=dist if cls == MatchClass.FUZZY else 0,
        )
        for _, neg_support, surface, cls, dist in kept[: p.k]
    ]


def classify_issues(
    s: CorpusSnapshot,
    fk: FieldKind,
    query: str,
    recs: list[Recommendation],
    params: MatchParams | None = None,
) -> set[IssueKind]:
    """Which issue kinds the query value exhibits, given its recommendations.

    Casing: the key's dominant surface differs from the query only by case,
    or (key unseen, cased field, nothing recommended) a non-stopword word
    starts lowercase.
    Spelling: the key is effectively unsupported (below the support floor)
    and some recommendation sits within the fuzzy distance budget.
    Ambiguity: an entity field whose two leading expansions name distinct
    keys with closer-than-ratio support.
    Specificity: expansions exist and the spelling condition does not hold.
    """
    p = params or MatchParams()
    qkey = normalize(query)
    if not qkey:
        return set()
    flags: set[IssueKind] = set()

    variants = s.variants(fk, qkey)
    key_support = sum(count for _, count in variants)
    if variants:
        top_surface = variants[0][0]
        if top_surface != query and top_surface.lower() == query.lower():
            flags.add(IssueKind.CASING)
    elif fk in _CASED_FIELDS and not recs:
        # Last-resort hint for keys the corpus has never seen: when there
        # is nothing better to recommend, at least point at the lowercase
        # word. With recommendations present, those explain the issue.
        for word in query.split():
            if normalize(word) in CASING_STOPWORDS:
                continue
            if word[:1].islower():
                flags.add(IssueKind.CASING)
                break

    budget = p.max_dist_for(len(qkey))
    spelling = False
    if key_support < p.s_min:
        for rec in recs:
            d = dl_distance(qkey, normalize(rec.surface))
            if 1 <= d <= budget:
                spelling = True
                break
    if spelling:
        flags.add(IssueKind.SPELLING)

    expansions = [r for r in recs if r.match_class == MatchClass.EXPANSION]
    if expansions:
        if fk in ENTITY_FIELDS:
            lead = expansions[0]
            lead_key = normalize(lead.surface)
            rival = next(
                (r for r in expansions[1:] if normalize(r.surface) != lead_key), None
            )
            if rival is not None and lead.support < p.ambiguity_ratio * rival.support:
                flags.add(IssueKind.AMBIGUITY)
        if not spelling:
            flags.add(IssueKind.SPECIFICITY)

    return flags

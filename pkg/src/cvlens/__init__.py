"""cvlens: corpus-backed resume evaluation.

Index a corpus of structured profiles, then evaluate any profile against
it: which sections similar people fill that this one leaves empty, and how
the rest of the corpus writes the same field values (more specific, better
spelled, correctly cased, less ambiguous).
"""

from .corpus import (
    BuildConfig,
    CohortCriterion,
    CohortKey,
    CorpusSnapshot,
    GLOBAL_COHORT,
    ProfileMatch,
    ingest,
    load_snapshot,
    save_snapshot,
)
from .evaluator import (
    EvalConfig,
    EvaluationReport,
    Suggestion,
    SuggestionKind,
    evaluate,
)
from .matcher import (
    IssueKind,
    MatchClass,
    MatchParams,
    Recommendation,
    classify_issues,
    recommend,
)
from .model import (
    FieldKind,
    Profile,
    SectionKind,
    SourceTag,
    parse_profile,
    section_present,
    serialize_profile,
)
from .synth import GeneratorSpec, generate, showcase_profile, showcase_spec
from .textnorm import dl_distance, expansion_match, normalize, token_matches

__version__ = "0.1.0"

__all__ = [
    "BuildConfig",
    "CohortCriterion",
    "CohortKey",
    "CorpusSnapshot",
    "EvalConfig",
    "EvaluationReport",
    "FieldKind",
    "GLOBAL_COHORT",
    "GeneratorSpec",
    "IssueKind",
    "MatchClass",
    "MatchParams",
    "Profile",
    "ProfileMatch",
    "Recommendation",
    "SectionKind",
    "SourceTag",
    "Suggestion",
    "SuggestionKind",
    "classify_issues",
    "dl_distance",
    "evaluate",
    "expansion_match",
    "generate",
    "ingest",
    "load_snapshot",
    "normalize",
    "parse_profile",
    "recommend",
    "save_snapshot",
    "section_present",
    "serialize_profile",
    "showcase_profile",
    "showcase_spec",
    "token_matches",
    "__version__",
]

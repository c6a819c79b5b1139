/** Wire types mirroring the documented cvlens HTTP API payloads. */

export type SourceTag = "primary_network" | "partner_platform";

export type FieldKindName =
  | "DegreeName"
  | "FieldOfStudy"
  | "JobTitle"
  | "SchoolName"
  | "OrganizationName"
  | "AwardTitle";

export type SuggestionKindName =
  | "section_completeness"
  | "specificity"
  | "spelling"
  | "casing"
  | "ambiguity";

export interface BasicInfo {
  first_name: string;
  last_name: string;
  headline?: string;
  location?: string;
}

/** One profile document, as POSTed to /api/evaluate. Section instances are
 * kept as plain records; the UI edits fields in place and never invents
 * structure. */
export interface ProfileDoc {
  schema_version: number;
  id: string;
  source: SourceTag;
  basic: BasicInfo;
  sections: Record<string, Record<string, unknown>[]>;
}

export interface ProfileMatch {
  source: SourceTag;
  id: string;
  display_name: string;
  headline: string | null;
  last_institution: string | null;
}

export interface SearchPayload {
  matches: ProfileMatch[];
  count: number;
}

export interface Recommendation {
  surface: string;
  support: number;
  match_class: "exact_key" | "expansion" | "fuzzy";
  distance: number;
}

export interface Suggestion {
  kind: SuggestionKindName;
  section: string;
  instance: number | null;
  field: FieldKindName | null;
  original: string;
  recommendations: Recommendation[];
  rationale: Record<string, unknown>;
}

export interface Report {
  schema_version: number;
  profile: { source: string; id: string } | "ad-hoc";
  snapshot_digest: string;
  config: Record<string, unknown>;
  summary: Record<SuggestionKindName, number>;
  suggestions: Suggestion[];
}

export interface SuggestPayload {
  kind: FieldKindName;
  query: string;
  recommendations: Recommendation[];
  issues: string[];
}

export interface EffectiveConfig {
  snapshot_path: string | null;
  host: string;
  port: number;
  log_level: string;
  evaluation: {
    completeness_threshold: number;
    cohort_criterion: string | null;
    checked_kinds: string[];
  };
  match_params: { k: number; s_min: number; ambiguity_ratio: number };
  build: Record<string, unknown>;
  snapshot_digest: string;
}

/** Profile-document attribute each recommendable field edits. */
export const FIELD_ATTR: Record<FieldKindName, { section: string; attr: string }> = {
  SchoolName: { section: "education", attr: "school_name" },
  DegreeName: { section: "education", attr: "degree_name" },
  FieldOfStudy: { section: "education", attr: "field_of_study" },
  JobTitle: { section: "experience", attr: "title" },
  OrganizationName: { section: "experience", attr: "organization_name" },
  AwardTitle: { section: "award", attr: "title" },
};

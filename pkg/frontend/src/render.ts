/** Pure HTML renderers. Every value shown comes straight from an API
 * payload; nothing (supports, rates, thresholds) is recomputed here. */

import type {
  EffectiveConfig,
  Report,
  SearchPayload,
  Suggestion,
  SuggestionKindName,
} from "./types.js";

export function escapeHtml(value: unknown): string {
  return String(value)
    .replaceAll("&", "&amp;")
    .replaceAll("<", "&lt;")
    .replaceAll(">", "&gt;")
    .replaceAll('"', "&quot;")
    .replaceAll("'", "&#39;");
}

const SOURCE_BADGE: Record<string, string> = {
  primary_network: "Network",
  partner_platform: "Partner",
};

const KIND_LABEL: Record<SuggestionKindName, string> = {
  section_completeness: "Missing section",
  specificity: "Could be more specific",
  spelling: "Possible spelling issue",
  casing: "Check capitalization",
  ambiguity: "Ambiguous name",
};

const KIND_ORDER: SuggestionKindName[] = [
  "section_completeness",
  "specificity",
  "spelling",
  "casing",
  "ambiguity",
];

export function renderSearchTiles(payload: SearchPayload): string {
  if (payload.count === 0) {
    return '<p class="empty-state">No matching profiles. Check the spelling, or drop the institution filter.</p>';
  }
  const tiles = payload.matches.map((m) => {
    const badgeClass = m.source === "primary_network" ? "badge-primary" : "badge-partner";
    const headline = m.headline ? `<p class="tile-headline">${escapeHtml(m.headline)}</p>` : "";
    const institution = m.last_institution
      ? `<p class="tile-institution">${escapeHtml(m.last_institution)}</p>`
      : "";
    return [
      `<button class="tile" data-action="open-profile" data-source="${escapeHtml(m.source)}" data-id="${escapeHtml(m.id)}">`,
      `<span class="badge ${badgeClass}">${SOURCE_BADGE[m.source] ?? escapeHtml(m.source)}</span>`,
      `<h3>${escapeHtml(m.display_name)}</h3>`,
      headline,
      institution,
      "</button>",
    ].join("");
  });
  return `<div class="tiles">${tiles.join("")}</div>`;
}

export function renderBanner(report: Report): string {
  const total = KIND_ORDER.reduce((n, kind) => n + (report.summary[kind] ?? 0), 0);
  if (total === 0) {
    return '<div class="banner banner-clean" data-total="0">Nothing to improve. This profile already looks great.</div>';
  }
  const items = KIND_ORDER.map(
    (kind) =>
      `<span class="banner-item" data-kind="${kind}" data-count="${report.summary[kind] ?? 0}">` +
      `${KIND_LABEL[kind]}: <strong>${report.summary[kind] ?? 0}</strong></span>`,
  );
  return (
    `<div class="banner" data-total="${total}">` +
    `<strong>${total} suggestion${total === 1 ? "" : "s"}</strong>` +
    items.join("") +
    "</div>"
  );
}

function suggestionCard(s: Suggestion): string {
  const location =
    s.instance === null
      ? escapeHtml(s.section)
      : `${escapeHtml(s.section)} #${(s.instance ?? 0) + 1} · ${escapeHtml(s.field ?? "")}`;
  const parts = [
    `<article class="card card-${s.kind}" data-kind="${s.kind}" data-section="${escapeHtml(s.section)}"` +
      ` data-instance="${s.instance ?? ""}" data-field="${escapeHtml(s.field ?? "")}">`,
    `<header><span class="card-kind">${KIND_LABEL[s.kind]}</span><span class="card-location">${location}</span></header>`,
  ];
  if (s.kind === "section_completeness") {
    const rate = Number(s.rationale["cohort_rate"] ?? 0);
    const size = Number(s.rationale["cohort_size"] ?? 0);
    parts.push(
      `<p>${Math.round(rate * 100)}% of ${size} similar profiles fill this section.</p>`,
    );
  } else {
    parts.push(`<p>You wrote <em class="original">${escapeHtml(s.original)}</em></p>`);
    const recs = s.recommendations.map(
      (r) =>
        `<li><button class="rec" data-action="apply" data-section="${escapeHtml(s.section)}"` +
        ` data-instance="${s.instance ?? ""}" data-field="${escapeHtml(s.field ?? "")}"` +
        ` data-surface="${escapeHtml(r.surface)}">${escapeHtml(r.surface)}</button>` +
        `<span class="support">${r.support} profiles</span></li>`,
    );
    parts.push(`<ul class="recs">${recs.join("")}</ul>`);
  }
  parts.push("</article>");
  return parts.join("");
}

export function renderReport(report: Report): string {
  const sections: string[] = [renderBanner(report)];
  let currentGroup = "";
  for (const s of report.suggestions) {
    const group = s.instance === null ? s.section : `${s.section}[${s.instance}]`;
    if (group !== currentGroup) {
      const label =
        s.instance === null ? s.section : `${s.section} #${(s.instance ?? 0) + 1}`;
      sections.push(`<h2 class="group">${escapeHtml(label)}</h2>`);
      currentGroup = group;
    }
    sections.push(suggestionCard(s));
  }
  return `<div class="report">${sections.join("")}</div>`;
}

export function renderConfigPanel(config: EffectiveConfig): string {
  return (
    '<dl class="config-panel">' +
    `<dt>Completeness threshold</dt><dd>${escapeHtml(config.evaluation.completeness_threshold)}</dd>` +
    `<dt>Similarity criterion</dt><dd>${escapeHtml(config.evaluation.cohort_criterion ?? "snapshot default")}</dd>` +
    `<dt>Top-k</dt><dd>${escapeHtml(config.match_params.k)}</dd>` +
    `<dt>Support floor</dt><dd>${escapeHtml(config.match_params.s_min)}</dd>` +
    `<dt>Snapshot</dt><dd class="digest">${escapeHtml(config.snapshot_digest.slice(0, 12))}…</dd>` +
    "</dl>"
  );
}

export function renderError(message: string, retryAction: string): string {
  return (
    `<div class="error"><p>${escapeHtml(message)}</p>` +
    `<button data-action="${escapeHtml(retryAction)}">Retry</button></div>`
  );
}

/** DOM wiring: search, open a profile into the working copy, evaluate,
 * apply recommendations with undo, export. Rendering and state live in the
 * pure modules; this file only routes events. */

import { ApiClient, ApiError } from "./api.js";
import { EvalQueue } from "./evalQueue.js";
import {
  renderBanner,
  renderConfigPanel,
  renderError,
  renderReport,
  renderSearchTiles,
} from "./render.js";
import type { FieldKindName, ProfileDoc, Report } from "./types.js";
import { WorkingCopy } from "./workingCopy.js";

const api = new ApiClient("");

let workingCopy: WorkingCopy | null = null;
let lastSearch: (() => void) | null = null;

function el(id: string): HTMLElement {
  const node = document.getElementById(id);
  if (!node) {
    throw new Error(`missing #${id}`);
  }
  return node;
}

const queue = new EvalQueue(
  (doc: ProfileDoc) => api.evaluate(doc),
  (report: Report) => {
    if (workingCopy) {
      workingCopy.lastReport = report;
    }
    el("report").innerHTML = renderReport(report);
    updateToolbar();
  },
  (error: unknown) => {
    // evaluation failed: the working copy stays as it is
    const message = error instanceof ApiError ? error.message : String(error);
    el("report").innerHTML = renderError(`Evaluation failed: ${message}`, "re-evaluate");
  },
);

function updateToolbar(): void {
  const undo = el("undo") as HTMLButtonElement;
  const exportBtn = el("export") as HTMLButtonElement;
  undo.disabled = !workingCopy?.canUndo;
  exportBtn.disabled = !workingCopy;
  el("dirty-flag").textContent = workingCopy?.dirty ? "edited" : "";
}

function runSearch(): void {
  const first = (el("first") as HTMLInputElement).value.trim();
  const last = (el("last") as HTMLInputElement).value.trim();
  const institution = (el("institution") as HTMLInputElement).value.trim();
  if (!first || !last) {
    el("results").innerHTML = renderError("Enter both a first and a last name.", "noop");
    return;
  }
  lastSearch = runSearch;
  api
    .search(first, last, institution || undefined)
    .then((payload) => {
      el("results").innerHTML = renderSearchTiles(payload);
    })
    .catch((error) => {
      el("results").innerHTML = renderError(String(error), "retry-search");
    });
}

function openProfile(source: string, id: string): void {
  api
    .profile(source, id)
    .then((doc) => {
      workingCopy = new WorkingCopy(doc);
      el("editor-title").textContent = `${doc.basic.first_name} ${doc.basic.last_name}`;
      el("report").innerHTML = "<p>Evaluating…</p>";
      updateToolbar();
      queue.schedule(workingCopy.doc);
    })
    .catch((error) => {
      el("report").innerHTML = renderError(String(error), "noop");
    });
}

function applyRecommendation(target: HTMLElement): void {
  if (!workingCopy) {
    return;
  }
  const section = target.dataset.section ?? "";
  const instance = Number(target.dataset.instance ?? "0");
  const field = (target.dataset.field ?? "") as FieldKindName;
  const surface = target.dataset.surface ?? "";
  workingCopy.applyRecommendation(section, instance, field, surface);
  updateToolbar();
  queue.schedule(workingCopy.doc);
}

function exportWorkingCopy(): void {
  if (!workingCopy) {
    return;
  }
  const blob = new Blob([workingCopy.exportText()], { type: "application/json" });
  const link = document.createElement("a");
  link.href = URL.createObjectURL(blob);
  link.download = `${workingCopy.doc.id || "profile"}.json`;
  link.click();
  URL.revokeObjectURL(link.href);
}

function onClick(event: Event): void {
  const target = (event.target as HTMLElement).closest<HTMLElement>("[data-action]");
  if (!target) {
    return;
  }
  switch (target.dataset.action) {
    case "open-profile":
      openProfile(target.dataset.source ?? "", target.dataset.id ?? "");
      break;
    case "apply":
      applyRecommendation(target);
      break;
    case "retry-search":
      lastSearch?.();
      break;
    case "re-evaluate":
      if (workingCopy) {
        queue.schedule(workingCopy.doc);
      }
      break;
    default:
      break;
  }
}

export function boot(): void {
  el("search-form").addEventListener("submit", (event) => {
    event.preventDefault();
    runSearch();
  });
  document.body.addEventListener("click", onClick);
  el("undo").addEventListener("click", () => {
    if (workingCopy && workingCopy.undo()) {
      updateToolbar();
      queue.schedule(workingCopy.doc);
    }
  });
  el("export").addEventListener("click", exportWorkingCopy);

  api
    .config()
    .then((config) => {
      el("config").innerHTML = renderConfigPanel(config);
    })
    .catch(() => {
      el("config").innerHTML = "<p>Configuration unavailable.</p>";
    });
  updateToolbar();
}

if (typeof document !== "undefined" && document.getElementById("search-form")) {
  boot();
}

export { renderBanner, renderReport, renderSearchTiles };

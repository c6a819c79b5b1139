/** The profile document under edit. Lives only in the browser: the sole
 * place it is ever sent is POST /api/evaluate. */

import { FIELD_ATTR } from "./types.js";
import type { FieldKindName, ProfileDoc, Report } from "./types.js";

export interface AppliedEdit {
  section: string;
  instance: number;
  attr: string;
  previous: unknown;
  applied: string;
}

export class WorkingCopy {
  doc: ProfileDoc;
  dirty = false;
  lastReport: Report | null = null;
  private undoStack: AppliedEdit[] = [];

  constructor(doc: ProfileDoc) {
    this.doc = doc;
  }

  /** Replace exactly one field with a recommended surface form. Returns
   * the edit record pushed onto the undo stack. */
  applyRecommendation(
    section: string,
    instance: number,
    field: FieldKindName,
    surface: string,
  ): AppliedEdit {
    const { attr } = FIELD_ATTR[field];
    const instances = this.doc.sections[section];
    if (!instances || instances[instance] === undefined) {
      throw new Error(`no ${section}[${instance}] in the working copy`);
    }
    const target = instances[instance];
    const edit: AppliedEdit = {
      section,
      instance,
      attr,
      previous: target[attr],
      applied: surface,
    };
    target[attr] = surface;
    this.undoStack.push(edit);
    this.dirty = true;
    return edit;
  }

  get canUndo(): boolean {
    return this.undoStack.length > 0;
  }

  /** Restore the field changed by the most recent apply. */
  undo(): AppliedEdit | null {
    const edit = this.undoStack.pop();
    if (!edit) {
      return null;
    }
    const target = this.doc.sections[edit.section][edit.instance];
    if (edit.previous === undefined) {
      delete target[edit.attr];
    } else {
      target[edit.attr] = edit.previous;
    }
    this.dirty = this.undoStack.length > 0;
    return edit;
  }

  /** Downloadable document text (the export path; there is no save API). */
  exportText(): string {
    return JSON.stringify(this.doc) + "\n";
  }
}

/** Keeps at most one evaluation request in flight. Clicks arriving while a
 * request runs collapse into a single follow-up evaluation of the latest
 * document state. */

import type { ProfileDoc, Report } from "./types.js";

export class EvalQueue {
  private inFlight = false;
  private pending: ProfileDoc | null = null;

  constructor(
    private readonly evaluate: (doc: ProfileDoc) => Promise<Report>,
    private readonly onReport: (report: Report) => void,
    private readonly onError: (error: unknown) => void,
  ) {}

  get busy(): boolean {
    return this.inFlight;
  }

  schedule(doc: ProfileDoc): void {
    if (this.inFlight) {
      this.pending = doc;
      return;
    }
    this.run(doc);
  }

  private run(doc: ProfileDoc): void {
    this.inFlight = true;
    this.evaluate(doc)
      .then((report) => this.onReport(report))
      .catch((error) => this.onError(error))
      .finally(() => {
        this.inFlight = false;
        if (this.pending !== null) {
          const next = this.pending;
          this.pending = null;
          this.run(next);
        }
      });
  }
}

/** Typed client for the cvlens HTTP API. The UI talks to the backend only
 * through these calls. */

import type {
  EffectiveConfig,
  ProfileDoc,
  Report,
  SearchPayload,
  SuggestPayload,
} from "./types.js";

export class ApiError extends Error {
  readonly status: number;
  readonly code: string;

  constructor(status: number, code: string, message: string) {
    super(message);
    this.status = status;
    this.code = code;
  }
}

async function parseError(response: Response): Promise<ApiError> {
  let code = "internal";
  let message = `HTTP ${response.status}`;
  try {
    const body = (await response.json()) as { error?: { code?: string; message?: string } };
    if (body.error) {
      code = body.error.code ?? code;
      message = body.error.message ?? message;
    }
  } catch {
    // non-JSON error body: keep the defaults
  }
  return new ApiError(response.status, code, message);
}

export class ApiClient {
  constructor(private readonly base: string = "") {}

  private async getJson<T>(path: string): Promise<T> {
    const response = await fetch(this.base + path);
    if (!response.ok) {
      throw await parseError(response);
    }
    return (await response.json()) as T;
  }

  health(): Promise<{ status: string; profile_count: number; snapshot_digest: string }> {
    return this.getJson("/api/health");
  }

  search(first: string, last: string, institution?: string): Promise<SearchPayload> {
    const params = new URLSearchParams({ first, last });
    if (institution) {
      params.set("institution", institution);
    }
    return this.getJson(`/api/search?${params.toString()}`);
  }

  profile(source: string, id: string): Promise<ProfileDoc> {
    return this.getJson(`/api/profiles/${encodeURIComponent(source)}/${encodeURIComponent(id)}`);
  }

  /** POST the working copy for evaluation; the document never goes
   * anywhere else. */
  async evaluate(doc: ProfileDoc): Promise<Report> {
    const response = await fetch(`${this.base}/api/evaluate`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(doc),
    });
    if (!response.ok) {
      throw await parseError(response);
    }
    return (await response.json()) as Report;
  }

  evaluateStored(source: string, id: string): Promise<Report> {
    return this.getJson(`/api/evaluate/${encodeURIComponent(source)}/${encodeURIComponent(id)}`);
  }

  suggest(kind: string, q: string): Promise<SuggestPayload> {
    const params = new URLSearchParams({ kind, q });
    return this.getJson(`/api/suggest?${params.toString()}`);
  }

  config(): Promise<EffectiveConfig> {
    return this.getJson("/api/config");
  }
}

"""Read-only HTTP API over one loaded snapshot.

Thin mappings onto the corpus, matcher, and evaluator operations; handlers
never mutate the snapshot, so any number of requests may run concurrently.
Errors carry a machine-readable code in the body: 400 for malformed
queries/bodies, 404 for unknown profiles, 422 for schema violations, 500
otherwise.
"""

from __future__ import annotations

from fastapi import FastAPI, Request, Response

from .config import AppConfig
from .corpus import CorpusSnapshot
from .errors import EmptyQuery, MalformedDocument, SchemaViolation
from .evaluator import evaluate
from .model import FieldKind, SourceTag, parse_profile
from .wire import (
    canonical_json,
    error_payload,
    health_payload,
    report_to_dict,
    search_payload,
    suggest_payload,
)


def _json_response(payload: dict, status_code: int = 200) -> Response:
    return Response(
        content=canonical_json(payload),
        status_code=status_code,
        media_type="application/json",
    )


def _error(status_code: int, code: str, message: str) -> Response:
    return _json_response(error_payload(code, message), status_code)


def create_app(snapshot: CorpusSnapshot, app_config: AppConfig | None = None) -> FastAPI:
    cfg = app_config or AppConfig()
    app = FastAPI(title="cvlens", docs_url=None, redoc_url=None)

    @app.exception_handler(Exception)
    async def _internal_error(request: Request, exc: Exception) -> Response:
        return _error(500, "internal", f"{type(exc).__name__}: {exc}")

    @app.get("/api/health")
    async def health() -> Response:
        return _json_response(health_payload(snapshot))

    @app.get("/api/search")
    async def search(first: str = "", last: str = "", institution: str = "") -> Response:
        if not first.strip() or not last.strip():
            return _error(400, "malformed_query", "first and last are required")
        matches = snapshot.search_profiles(first, last, institution or None)
        return _json_response(search_payload(matches))

    @app.get("/api/profiles/{source}/{pid}")
    async def get_profile(source: str, pid: str) -> Response:
        try:
            tag = SourceTag(source)
        except ValueError:
            return _error(400, "malformed_query", f"unknown source {source!r}")
        doc = snapshot.get_document(tag, pid)
        if doc is None:
            return _error(404, "unknown_profile", f"no profile {source}/{pid}")
        return Response(content=doc + "\n", media_type="application/json")

    @app.post("/api/evaluate")
    async def evaluate_adhoc(request: Request) -> Response:
        body = await request.body()
        try:
            profile = parse_profile(body.decode("utf-8", errors="strict"))
        except UnicodeDecodeError:
            return _error(400, "malformed_body", "body must be UTF-8 text")
        except MalformedDocument as exc:
            return _error(400, "malformed_body", str(exc))
        except SchemaViolation as exc:
            return _error(422, "schema_violation", str(exc))
        report = evaluate(snapshot, profile, cfg.evaluation)
        return _json_response(report_to_dict(report))

    @app.get("/api/evaluate/{source}/{pid}")
    async def evaluate_stored(source: str, pid: str) -> Response:
        try:
            tag = SourceTag(source)
        except ValueError:
            return _error(400, "malformed_query", f"unknown source {source!r}")
        profile = snapshot.get_profile(tag, pid)
        if profile is None:
            return _error(404, "unknown_profile", f"no profile {source}/{pid}")
        report = evaluate(snapshot, profile, cfg.evaluation)
        return _json_response(report_to_dict(report))

    @app.get("/api/suggest")
    async def suggest(kind: str = "", q: str = "") -> Response:
        try:
            fk = FieldKind(kind)
        except ValueError:
            return _error(400, "malformed_query", f"unknown field kind {kind!r}")
        if not q.strip():
            return _error(400, "malformed_query", "q is required")
        try:
            payload = suggest_payload(snapshot, fk, q, cfg.match_params)
        except EmptyQuery as exc:
            return _error(400, "malformed_query", str(exc))
        return _json_response(payload)

    @app.get("/api/config")
    async def get_config() -> Response:
        effective = cfg.to_dict()
        effective["snapshot_digest"] = snapshot.content_digest
        return _json_response(effective)

    return app

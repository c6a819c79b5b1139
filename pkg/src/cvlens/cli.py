"""Command-line entry points.

Exit codes: 0 success, 1 usage error, 2 data error (unparseable profile,
empty corpus, corrupt snapshot, infeasible generator spec), 3 I/O failure.
"""

from __future__ import annotations

import logging
import sys
from pathlib import Path

import click

from .config import AppConfig, load_config, override
from .corpus import CorpusSnapshot, ingest, load_snapshot, save_snapshot
from .errors import (
    CvlensError,
    DigestMismatch,
    EmptyCorpus,
    EmptyQuery,
    InfeasibleSpec,
    IoFailure,
    MalformedDocument,
    SchemaViolation,
    VersionMismatch,
)
from .evaluator import EvalConfig, evaluate
from .matcher import MatchParams
from .model import FieldKind, parse_profile, serialize_profile
from .report import render_text, write_report_files
from .synth import generate, showcase_profile, showcase_spec, spec_from_file
from .wire import (
    canonical_json,
    report_to_dict,
    search_payload,
    suggest_payload,
)

log = logging.getLogger("cvlens")

_DATA_ERRORS = (
    EmptyCorpus,
    MalformedDocument,
    SchemaViolation,
    EmptyQuery,
    InfeasibleSpec,
    VersionMismatch,
    DigestMismatch,
)


def _read_lines(paths: tuple[str, ...]):
    for path in paths:
        try:
            with open(path, "r", encoding="utf-8") as fh:
                for line in fh:
                    line = line.rstrip("\n")
                    if line.strip():
                        yield line
        except OSError as exc:
            raise IoFailure(f"cannot read corpus file {path}: {exc}") from exc


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise IoFailure(f"cannot read {path}: {exc}") from exc


def _app_config(config_path: str | None) -> AppConfig:
    return load_config(config_path)


def _snapshot(path: str) -> CorpusSnapshot:
    return load_snapshot(path)


@click.group()
@click.option("-v", "--verbose", is_flag=True, help="Enable debug logging.")
def cli(verbose: bool) -> None:
    """Corpus-backed resume evaluation."""
    logging.basicConfig(level=logging.DEBUG if verbose else logging.WARNING)


@cli.command("ingest")
@click.option("--in", "in_paths", multiple=True, required=True, help="Corpus file (repeatable).")
@click.option("--out", "out_path", required=True, help="Snapshot file to write.")
@click.option("--config", "config_path", default=None, help="Config file.")
def ingest_cmd(in_paths: tuple[str, ...], out_path: str, config_path: str | None) -> None:
    """Build a snapshot from newline-delimited profile documents."""
    cfg = _app_config(config_path)
    snapshot = ingest(_read_lines(in_paths), cfg.build)
    save_snapshot(snapshot, out_path)
    click.echo(f"profiles: {snapshot.profile_count}")
    click.echo(f"parse_failures: {snapshot.parse_failures}")
    click.echo(f"parse_warnings: {snapshot.parse_warnings}")
    click.echo(f"duplicates: {snapshot.duplicates}")
    click.echo(f"digest: {snapshot.content_digest}")
    click.echo(f"snapshot: {out_path}")


@cli.command("evaluate")
@click.option("--snapshot", "snapshot_path", required=True)
@click.option("--profile", "profile_path", required=True, help="Profile document file.")
@click.option("--format", "fmt", type=click.Choice(["text", "structured"]), default="text")
@click.option("--threshold", type=float, default=None, help="Completeness threshold override.")
@click.option("--config", "config_path", default=None)
def evaluate_cmd(
    snapshot_path: str,
    profile_path: str,
    fmt: str,
    threshold: float | None,
    config_path: str | None,
) -> None:
    """Evaluate one profile document against a snapshot."""
    cfg = _app_config(config_path)
    eval_cfg = cfg.evaluation
    if threshold is not None:
        eval_cfg = EvalConfig.from_dict({**eval_cfg.to_dict(), "completeness_threshold": threshold})
    snapshot = _snapshot(snapshot_path)
    profile = parse_profile(_read_text(profile_path))
    report = evaluate(snapshot, profile, eval_cfg)
    if fmt == "structured":
        click.echo(canonical_json(report_to_dict(report)), nl=False)
    else:
        click.echo(render_text(report))


@cli.command("suggest")
@click.option("--snapshot", "snapshot_path", required=True)
@click.option("--kind", required=True, help="Field kind, e.g. DegreeName.")
@click.option("--q", "query", required=True, help="Field value to look up.")
@click.option("--format", "fmt", type=click.Choice(["text", "structured"]), default="text")
@click.option("--k", type=int, default=None, help="Top-k override.")
@click.option("--s-min", type=int, default=None, help="Support floor override.")
@click.option("--config", "config_path", default=None)
def suggest_cmd(
    snapshot_path: str,
    kind: str,
    query: str,
    fmt: str,
    k: int | None,
    s_min: int | None,
    config_path: str | None,
) -> None:
    """Print the top corpus-backed recommendations for a field value."""
    cfg = _app_config(config_path)
    try:
        fk = FieldKind(kind)
    except ValueError:
        raise click.UsageError(
            f"unknown kind {kind!r}; choose from {', '.join(f.value for f in FieldKind)}"
        ) from None
    params = cfg.match_params
    if k is not None or s_min is not None:
        raw = params.to_dict()
        if k is not None:
            raw["k"] = k
        if s_min is not None:
            raw["s_min"] = s_min
        params = MatchParams.from_dict(raw)
    snapshot = _snapshot(snapshot_path)
    payload = suggest_payload(snapshot, fk, query, params)
    if fmt == "structured":
        click.echo(canonical_json(payload), nl=False)
        return
    if not payload["recommendations"]:
        click.echo("no recommendations")
        return
    for i, rec in enumerate(payload["recommendations"], start=1):
        click.echo(f"{i}. {rec['surface']}  ({rec['support']} profiles, {rec['match_class']})")
    if payload["issues"]:
        click.echo("issues: " + ", ".join(payload["issues"]))


@cli.command("search")
@click.option("--snapshot", "snapshot_path", required=True)
@click.option("--first", required=True)
@click.option("--last", required=True)
@click.option("--institution", default=None, help="Narrow by last-graduated institution.")
@click.option("--format", "fmt", type=click.Choice(["text", "structured"]), default="text")
def search_cmd(
    snapshot_path: str, first: str, last: str, institution: str | None, fmt: str
) -> None:
    """Find profiles by name, optionally narrowed by institution."""
    snapshot = _snapshot(snapshot_path)
    payload = search_payload(snapshot.search_profiles(first, last, institution))
    if fmt == "structured":
        click.echo(canonical_json(payload), nl=False)
        return
    if not payload["matches"]:
        click.echo("no matches")
        return
    for m in payload["matches"]:
        inst = f"  ({m['last_institution']})" if m["last_institution"] else ""
        click.echo(f"{m['source']}  {m['id']}  {m['display_name']}{inst}")


@cli.command("gen-corpus")
@click.option("--spec", "spec_arg", required=True, help='"showcase" or a generator spec file.')
@click.option("--seed", type=int, default=None, help="Seed override.")
@click.option("--out", "out_dir", required=True, help="Output directory.")
def gen_corpus_cmd(spec_arg: str, seed: int | None, out_dir: str) -> None:
    """Generate a seeded synthetic corpus plus its ground-truth manifest."""
    if spec_arg == "showcase":
        spec = showcase_spec(seed if seed is not None else 42)
        demo = showcase_profile()
    else:
        spec = spec_from_file(spec_arg, seed)
        demo = None
    result = generate(spec, out_dir)
    click.echo(f"corpus: {result.corpus_path}")
    click.echo(f"manifest: {result.manifest_path}")
    click.echo(f"profiles: {spec.profile_count}")
    if demo is not None:
        demo_path = Path(out_dir) / "showcase_profile.json"
        demo_path.write_text(serialize_profile(demo) + "\n", encoding="utf-8")
        click.echo(f"demo_profile: {demo_path}")


@cli.command("report")
@click.option("--snapshot", "snapshot_path", required=True)
@click.option("--profile", "profile_path", required=True)
@click.option("--out", "out_dir", required=True, help="Directory for report artifacts.")
@click.option("--config", "config_path", default=None)
def report_cmd(
    snapshot_path: str, profile_path: str, out_dir: str, config_path: str | None
) -> None:
    """Evaluate and write report.json, suggestions.csv, and figures."""
    cfg = _app_config(config_path)
    snapshot = _snapshot(snapshot_path)
    profile = parse_profile(_read_text(profile_path))
    report = evaluate(snapshot, profile, cfg.evaluation)
    paths = write_report_files(report, out_dir)
    for name, path in paths.items():
        click.echo(f"{name}: {path}")


@cli.command("serve")
@click.option("--config", "config_path", default=None)
@click.option("--snapshot", "snapshot_path", default=None, help="Overrides the config value.")
@click.option("--host", default=None)
@click.option("--port", type=int, default=None)
@click.option("--static", "static_dir", default=None, help="Serve a UI bundle at /.")
def serve_cmd(
    config_path: str | None,
    snapshot_path: str | None,
    host: str | None,
    port: int | None,
    static_dir: str | None,
) -> None:
    """Serve the HTTP API over one immutable snapshot."""
    import uvicorn

    from .api import create_app

    cfg = override(_app_config(config_path), snapshot_path=snapshot_path, host=host, port=port)
    if not cfg.snapshot_path:
        raise click.UsageError("no snapshot: pass --snapshot or set snapshot_path in the config")
    snapshot = _snapshot(cfg.snapshot_path)
    app = create_app(snapshot, cfg)
    if static_dir:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")
    log.info("serving %s profiles on %s:%s", snapshot.profile_count, cfg.host, cfg.port)
    uvicorn.run(app, host=cfg.host, port=cfg.port, log_level=cfg.log_level)


def main(argv: list[str] | None = None) -> int:
    """Entry point with the documented exit-code mapping."""
    try:
        cli.main(args=argv, standalone_mode=False)
        return 0
    except click.UsageError as exc:
        exc.show()
        return 1
    except click.ClickException as exc:
        exc.show()
        return 1
    except click.Abort:
        click.echo("aborted", err=True)
        return 1
    except IoFailure as exc:
        click.echo(f"io error: {exc}", err=True)
        return 3
    except _DATA_ERRORS as exc:
        click.echo(f"data error: {exc}", err=True)
        return 2
    except CvlensError as exc:
        click.echo(f"error: {exc}", err=True)
        return 2
    except OSError as exc:
        click.echo(f"io error: {exc}", err=True)
        return 3


if __name__ == "__main__":
    sys.exit(main())

"""Application configuration: one declarative JSON file, CLI flags override.

Every key has a default, so an empty file (or none at all) is valid. Keys:

    snapshot_path   path to the snapshot the server loads (no default)
    host, port      listen address for `serve`
    log_level       debug | info | warning | error
    evaluation      completeness_threshold, cohort_criterion, checked_kinds
    match_params    k, s_min, ambiguity_ratio
    build           cohort_criterion, n_min, trigram_pad
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from pathlib import Path

from .corpus import BuildConfig
from .errors import IoFailure, MalformedDocument
from .evaluator import EvalConfig
from .matcher import MatchParams


@dataclass(frozen=True)
class AppConfig:
    snapshot_path: str | None = None
    host: str = "127.0.0.1"
    port: int = 8356
    log_level: str = "info"
    evaluation: EvalConfig = field(default_factory=EvalConfig)
    build: BuildConfig = field(default_factory=BuildConfig)

    @property
    def match_params(self) -> MatchParams:
        return self.evaluation.match_params

    def to_dict(self) -> dict:
        eval_dict = self.evaluation.to_dict()
        match_params = eval_dict.pop("match_params")
        return {
            "snapshot_path": self.snapshot_path,
            "host": self.host,
            "port": self.port,
            "log_level": self.log_level,
            "evaluation": eval_dict,
            "match_params": match_params,
            "build": self.build.to_dict(),
        }


def load_config(path: str | Path | None = None) -> AppConfig:
    """Read a config file; missing path means all defaults."""
    if path is None:
        return AppConfig()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = fh.read()
    except OSError as exc:
        raise IoFailure(f"cannot read config {path}: {exc}") from exc
    try:
        data = json.loads(raw) if raw.strip() else {}
    except json.JSONDecodeError as exc:
        raise MalformedDocument(f"config {path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise MalformedDocument(f"config {path} must hold a JSON object")

    eval_raw = dict(data.get("evaluation", {}))
    if "match_params" not in eval_raw:
        eval_raw["match_params"] = data.get("match_params", {})
    evaluation = EvalConfig.from_dict(eval_raw)
    build = BuildConfig.from_dict({**BuildConfig().to_dict(), **data.get("build", {})})

    return AppConfig(
        snapshot_path=data.get("snapshot_path"),
        host=data.get("host", "127.0.0.1"),
        port=data.get("port", 8356),
        log_level=data.get("log_level", "info"),
        evaluation=evaluation,
        build=build,
    )


def override(cfg: AppConfig, **updates) -> AppConfig:
    """Apply non-None CLI overrides on top of a loaded config."""
    updates = {k: v for k, v in updates.items() if v is not None}
    return replace(cfg, **updates) if updates else cfg

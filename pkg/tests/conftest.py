"""Shared fixtures: the seeded showcase corpus is generated once per session
and reused by the unit, integration, and acceptance tests."""

from __future__ import annotations

import time

import pytest

from cvlens.corpus import BuildConfig, ingest
from cvlens.synth import generate, showcase_profile, showcase_spec


@pytest.fixture(scope="session")
def showcase_result(tmp_path_factory):
    out = tmp_path_factory.mktemp("showcase_result")
    return generate(showcase_spec(), out)


@pytest.fixture(scope="session")
def showcase_lines(showcase_result):
    return showcase_result.corpus_path.read_text(encoding="utf-8").splitlines()


@pytest.fixture(scope="session")
def showcase_manifest(showcase_result):
    return showcase_result.manifest

@pytest.fixture(scope="session")
def showcase_corpus_path(showcase_result):
    return showcase_result.corpus_path


@pytest.fixture(scope="session")
def ingest_seconds(showcase_lines):
    """Build the session snapshot, remembering how long ingestion took."""
    start = time.perf_counter()
    snapshot = ingest(showcase_lines, BuildConfig())
    return snapshot, time.perf_counter() - start


@pytest.fixture(scope="session")
def snapshot(ingest_seconds):
    return ingest_seconds[0]


@pytest.fixture(scope="session")
def walkthrough():
    return showcase_profile()

"""CLI workflows and the documented exit-code contract (0 ok, 1 usage,
2 data error, 3 I/O)."""

from __future__ import annotations

import json
from pathlib import Path

import pytest

from cvlens.cli import main
from cvlens.corpus import save_snapshot
from cvlens.model import serialize_profile
from docbuild import make_doc

PNG_MAGIC = b"\x89PNG\r\n\x1a\n"


@pytest.fixture(scope="module")
def snapshot_file(tmp_path_factory, snapshot):
    path = tmp_path_factory.mktemp("cli") / "showcase.bin"
    save_snapshot(snapshot, path)
    return path


@pytest.fixture()
def walkthrough_file(tmp_path, walkthrough):
    path = tmp_path / "walkthrough.json"
    path.write_text(serialize_profile(walkthrough) + "\n", encoding="utf-8")
    return path


def run(capsys, *argv) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_ingest_prints_counts_and_digest(tmp_path, capsys, showcase_corpus_path):
    out = tmp_path / "snap.bin"
    code, stdout, _ = run(
        capsys, "ingest", "--in", str(showcase_corpus_path), "--out", str(out)
    )
    assert code == 0
    assert "profiles: 10000" in stdout
    assert "parse_failures: 0" in stdout
    assert out.exists()


def test_ingest_rerun_prints_identical_digest(tmp_path, capsys, showcase_corpus_path):
    out1, out2 = tmp_path / "one.bin", tmp_path / "two.bin"
    _, stdout1, _ = run(capsys, "ingest", "--in", str(showcase_corpus_path), "--out", str(out1))
    _, stdout2, _ = run(capsys, "ingest", "--in", str(showcase_corpus_path), "--out", str(out2))
    digest1 = [l for l in stdout1.splitlines() if l.startswith("digest:")]
    digest2 = [l for l in stdout2.splitlines() if l.startswith("digest:")]
    assert digest1 == digest2


def test_ingest_empty_file_exits_2(tmp_path, capsys):
    empty = tmp_path / "empty.jsonl"
    empty.write_text("")
    code, _, stderr = run(
        capsys, "ingest", "--in", str(empty), "--out", str(tmp_path / "s.bin")
    )
    assert code == 2
    assert "data error" in stderr


def test_ingest_missing_input_exits_3(tmp_path, capsys):
    code, _, stderr = run(
        capsys, "ingest", "--in", str(tmp_path / "nope.jsonl"), "--out", str(tmp_path / "s.bin")
    )
    assert code == 3


def test_missing_required_option_exits_1(capsys):
    code, _, _ = run(capsys, "ingest", "--out", "x.bin")
    assert code == 1


def test_unknown_command_exits_1(capsys):
    code, _, _ = run(capsys, "frobnicate")
    assert code == 1


def test_evaluate_text_format(capsys, snapshot_file, walkthrough_file):
    code, stdout, _ = run(
        capsys, "evaluate", "--snapshot", str(snapshot_file), "--profile", str(walkthrough_file)
    )
    assert code == 0
    assert "7 suggestions" in stdout


def test_evaluate_structured_matches_golden(capsys, snapshot_file, walkthrough_file):
    code, stdout, _ = run(
        capsys,
        "evaluate",
        "--snapshot",
        str(snapshot_file),
        "--profile",
        str(walkthrough_file),
        "--format",
        "structured",
    )
    assert code == 0
    golden = (Path(__file__).parent / "data" / "golden_walkthrough_report.json").read_text(
        encoding="utf-8"
    )
    assert stdout == golden


def test_evaluate_threshold_flag_overrides(capsys, snapshot_file, walkthrough_file):
    code, stdout, _ = run(
        capsys,
        "evaluate",
        "--snapshot",
        str(snapshot_file),
        "--profile",
        str(walkthrough_file),
        "--threshold",
        "0.30",
    )
    assert code == 0
    assert "6 suggestions" in stdout  # the 25% award cohort no longer clears 30%


def test_evaluate_bad_profile_exits_2(tmp_path, capsys, snapshot_file):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, stderr = run(
        capsys, "evaluate", "--snapshot", str(snapshot_file), "--profile", str(bad)
    )
    assert code == 2


def test_evaluate_missing_snapshot_exits_3(tmp_path, capsys, walkthrough_file):
    code, _, _ = run(
        capsys,
        "evaluate",
        "--snapshot",
        str(tmp_path / "missing.bin"),
        "--profile",
        str(walkthrough_file),
    )
    assert code == 3


def test_suggest_text_lists_supports(capsys, snapshot_file):
    code, stdout, _ = run(
        capsys, "suggest", "--snapshot", str(snapshot_file), "--kind", "DegreeName", "--q", "Master"
    )
    assert code == 0
    lines = stdout.splitlines()
    assert lines[0] == "1. Master's degree  (1200 profiles, expansion)"
    assert lines[1].startswith("2. Master of Business Administration (MBA)")


def test_suggest_unseen_gibberish_empty(capsys, snapshot_file):
    code, stdout, _ = run(
        capsys, "suggest", "--snapshot", str(snapshot_file), "--kind", "DegreeName", "--q", "Qqqxxzz Wwyy"
    )
    assert code == 0
    assert "no recommendations" in stdout


def test_suggest_exact_canonical_empty(capsys, snapshot_file):
    code, stdout, _ = run(
        capsys, "suggest", "--snapshot", str(snapshot_file), "--kind", "OrganizationName", "--q", "DBS Bank"
    )
    assert code == 0
    assert "no recommendations" in stdout


def test_suggest_unknown_kind_exits_1(capsys, snapshot_file):
    code, _, _ = run(
        capsys, "suggest", "--snapshot", str(snapshot_file), "--kind", "HatSize", "--q", "x"
    )
    assert code == 1


def test_suggest_blank_query_exits_2(capsys, snapshot_file):
    code, _, _ = run(
        capsys, "suggest", "--snapshot", str(snapshot_file), "--kind", "DegreeName", "--q", "---"
    )
    assert code == 2


def test_search_text_and_filter(capsys, snapshot_file):
    code, stdout, _ = run(
        capsys, "search", "--snapshot", str(snapshot_file), "--first", "Wei", "--last", "Tan"
    )
    assert code == 0
    assert len(stdout.strip().splitlines()) == 5
    code, stdout, _ = run(
        capsys,
        "search",
        "--snapshot",
        str(snapshot_file),
        "--first",
        "Wei",
        "--last",
        "Tan",
        "--institution",
        "Velmore",
    )
    assert len(stdout.strip().splitlines()) == 2


def test_search_no_matches(capsys, snapshot_file):
    code, stdout, _ = run(
        capsys, "search", "--snapshot", str(snapshot_file), "--first", "Zz", "--last", "Qq"
    )
    assert code == 0
    assert "no matches" in stdout


def test_gen_corpus_deterministic(tmp_path, capsys):
    spec = {
        "seed": 9,
        "profile_count": 50,
        "schools": [{"name": "Mini U", "size": 50, "award_rate": 0.2}],
        "degrees": {"canonical": [{"surface": "BSc", "count": 10}], "filler": ["BA"]},
        "titles": {"canonical": [], "filler": ["Clerk"]},
        "organizations": {"canonical": [], "filler": ["Acme"]},
        "fields_of_study": {"canonical": [], "filler": ["Art"]},
        "awards": {"canonical": [], "filler": ["Star"]},
    }
    spec_path = tmp_path / "spec.json"
    spec_path.write_text(json.dumps(spec))
    code1, _, _ = run(capsys, "gen-corpus", "--spec", str(spec_path), "--out", str(tmp_path / "a"))
    code2, _, _ = run(capsys, "gen-corpus", "--spec", str(spec_path), "--out", str(tmp_path / "b"))
    assert code1 == code2 == 0
    assert (tmp_path / "a" / "corpus.jsonl").read_bytes() == (tmp_path / "b" / "corpus.jsonl").read_bytes()


def test_gen_corpus_showcase_writes_demo_profile(tmp_path, capsys):
    # small seed override still emits all artifacts; use the real spec name
    code, stdout, _ = run(
        capsys, "gen-corpus", "--spec", "showcase", "--seed", "42", "--out", str(tmp_path / "sc")
    )
    assert code == 0
    assert (tmp_path / "sc" / "corpus.jsonl").exists()
    assert (tmp_path / "sc" / "ground_truth.json").exists()
    assert (tmp_path / "sc" / "showcase_profile.json").exists()


def test_gen_corpus_infeasible_exits_2(tmp_path, capsys):
    spec = {
        "seed": 1,
        "profile_count": 10,
        "schools": [{"name": "U", "size": 10}],
        "degrees": {"canonical": [{"surface": "BSc", "count": 99999}], "filler": []},
        "titles": {"canonical": [], "filler": ["T"]},
        "organizations": {"canonical": [], "filler": ["O"]},
        "fields_of_study": {"canonical": [], "filler": ["F"]},
        "awards": {"canonical": [], "filler": ["A"]},
    }
    spec_path = tmp_path / "spec.json"
    spec_path.write_text(json.dumps(spec))
    code, _, stderr = run(capsys, "gen-corpus", "--spec", str(spec_path), "--out", str(tmp_path / "x"))
    assert code == 2


def test_report_writes_all_artifacts(tmp_path, capsys, snapshot_file, walkthrough_file):
    out = tmp_path / "artifacts"
    code, stdout, _ = run(
        capsys,
        "report",
        "--snapshot",
        str(snapshot_file),
        "--profile",
        str(walkthrough_file),
        "--out",
        str(out),
    )
    assert code == 0
    assert (out / "report.json").exists()
    assert (out / "suggestions.csv").exists()
    assert (out / "summary.png").read_bytes()[:8] == PNG_MAGIC
    assert (out / "recommendations.png").read_bytes()[:8] == PNG_MAGIC


def test_serve_requires_snapshot(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text("{}")
    code, _, _ = run(capsys, "serve", "--config", str(cfg))
    assert code == 1


def test_config_file_changes_suggest_and_flag_wins(tmp_path, capsys, snapshot_file):
    # s_min 1000 from the file hides everything below that support
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"match_params": {"s_min": 1000}}))
    code, stdout, _ = run(
        capsys,
        "suggest", "--snapshot", str(snapshot_file),
        "--kind", "DegreeName", "--q", "Master",
        "--config", str(cfg),
    )
    assert code == 0
    assert "Master's degree" in stdout          # 1200 clears the floor
    assert "Master of Science (MSc)" not in stdout  # 800 does not
    # an explicit flag overrides the file value
    code, stdout, _ = run(
        capsys,
        "suggest", "--snapshot", str(snapshot_file),
        "--kind", "DegreeName", "--q", "Master",
        "--config", str(cfg), "--s-min", "5",
    )
    assert code == 0
    assert "Master of Science (MSc)" in stdout


def test_config_file_threshold_applies_to_evaluate(tmp_path, capsys, snapshot_file, walkthrough_file):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"evaluation": {"completeness_threshold": 0.30}}))
    code, stdout, _ = run(
        capsys,
        "evaluate", "--snapshot", str(snapshot_file),
        "--profile", str(walkthrough_file),
        "--config", str(cfg),
    )
    assert code == 0
    assert "6 suggestions" in stdout  # the 25% award cohort is below 30%

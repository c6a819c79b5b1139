"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line
(run with -s to see them live).

Covers: exact support-count equivalence against the generator manifest and
an independent raw-file scan, fuzzy-lookup equivalence against a plain
distance scan, reproduction of the planted suggestion scenarios at exact
ranks and flags, the completeness threshold bracket, the property suite,
the performance envelope, and the frozen walkthrough golden report.
"""

from __future__ import annotations

import json
import random
import string
import threading
import time
from collections import Counter
from pathlib import Path

import pytest

from cvlens.corpus import BuildConfig, ingest, load_snapshot, save_snapshot
from cvlens.evaluator import EvalConfig, SuggestionKind, evaluate
from cvlens.matcher import IssueKind, MatchParams, classify_issues, recommend
from cvlens.model import FieldKind, parse_profile, serialize_profile
from cvlens.textnorm import dl_distance, normalize
from cvlens.wire import canonical_json, report_to_dict
from docbuild import make_doc

GOLDEN = Path(__file__).parent / "data" / "golden_walkthrough_report.json"


def _verdict(name: str, ok: bool, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    suffix = f"  ({detail})" if detail else ""
    print(f"ACCEPTANCE {name}: {status}{suffix}")
    assert ok, f"{name} failed {detail}"


# -- criterion: oracle equivalence for support counts ---------------------

def _scan_raw_supports(corpus_path: Path) -> dict[str, Counter]:
    """Independent count over the raw corpus file: plain JSON access, no
    profile model involved."""
    out = {fk.value: Counter() for fk in FieldKind}
    spots = [
        ("education", "degree_name", "DegreeName"),
        ("education", "field_of_study", "FieldOfStudy"),
        ("education", "school_name", "SchoolName"),
        ("experience", "title", "JobTitle"),
        ("experience", "organization_name", "OrganizationName"),
        ("award", "title", "AwardTitle"),
    ]
    with open(corpus_path, encoding="utf-8") as fh:
        for line in fh:
            sections = json.loads(line).get("sections", {})
            for section, attr, field in spots:
                for inst in sections.get(section, []):
                    value = inst.get(attr)
                    if isinstance(value, str) and value.strip():
                        out[field][value] += 1
    return out


def test_acceptance_support_counts_match_manifest_and_scan(
    snapshot, showcase_manifest, showcase_corpus_path
):
    start = time.perf_counter()
    scanned = _scan_raw_supports(showcase_corpus_path)
    ok = True
    detail = ""
    for fk in FieldKind:
        manifest_counts = showcase_manifest["surface_supports"][fk.value]
        index_counts = snapshot.field_index[fk].surface_support
        if index_counts != manifest_counts or dict(scanned[fk.value]) != manifest_counts:
            ok = False
            detail = f"mismatch in {fk.value}"
            break
    elapsed = time.perf_counter() - start
    if ok and elapsed >= 60:
        ok, detail = False, f"scan took {elapsed:.1f}s"
    _verdict("support-count oracle equivalence", ok, detail or f"{elapsed:.1f}s")


# -- criterion: fuzzy lookup equals a plain distance scan ------------------

def test_acceptance_fuzzy_equals_brute_force(snapshot):
    rng = random.Random(4242)
    mismatches = 0
    checked = 0
    for fk in FieldKind:
        idx = snapshot.field_index[fk]
        keys = list(idx.key_variants)
        for _ in range(200):
            if keys and rng.random() < 0.7:
                base = rng.choice(keys)
                chars = list(base)
                for _ in range(rng.randint(0, 2)):
                    op = rng.randrange(3)
                    pos = rng.randrange(max(1, len(chars)))
                    if op == 0 and chars:
                        chars.pop(pos % len(chars))
                    elif op == 1:
                        chars.insert(pos, rng.choice(string.ascii_lowercase))
                    elif chars:
                        chars[pos % len(chars)] = rng.choice(string.ascii_lowercase)
                query = normalize("".join(chars))
            else:
                query = normalize(
                    "".join(rng.choice("abcdefgh ") for _ in range(rng.randint(1, 14)))
                )
            if not query:
                continue
            budget = MatchParams.max_dist_for(len(query))
            got = set(idx.fuzzy_lookup(query, budget))
            want = {k for k in keys if dl_distance(query, k) <= budget}
            checked += 1
            if got != want:
                mismatches += 1
    _verdict(
        "fuzzy-lookup oracle equivalence",
        mismatches == 0,
        f"{checked} queries, {mismatches} mismatches",
    )


# -- criterion: planted suggestion scenarios -------------------------------

def test_acceptance_scenario_reproduction(snapshot):
    p = MatchParams()
    failures = []

    recs = recommend(snapshot, FieldKind.DEGREE_NAME, "Master", p)
    if [r.surface for r in recs[:2]] != [
        "Master's degree",
        "Master of Business Administration (MBA)",
    ]:
        failures.append("terse degree ranks")
    if (recs[0].support, recs[1].support) != (1200, 1100):
        failures.append("terse degree supports")

    surfaces = [r.surface for r in recommend(snapshot, FieldKind.DEGREE_NAME, "Bsc", p)]
    if "Bachelor of Science (BSc)" not in surfaces or "Bachelor of Science (B.Sc.)" not in surfaces:
        failures.append("both parenthesized spellings")

    recs = recommend(snapshot, FieldKind.JOB_TITLE, "Teaching asistant", p)
    flags = classify_issues(snapshot, FieldKind.JOB_TITLE, "Teaching asistant", recs, p)
    if IssueKind.SPELLING not in flags or "Teaching Assistant" not in [r.surface for r in recs]:
        failures.append("misspelled title")

    recs = recommend(snapshot, FieldKind.JOB_TITLE, "software engr", p)
    if "Software Engineer" not in [r.surface for r in recs[:3]]:
        failures.append("abbreviated title top-3")

    recs = recommend(snapshot, FieldKind.SCHOOL_NAME, "raffles", p)
    flags = classify_issues(snapshot, FieldKind.SCHOOL_NAME, "raffles", recs, p)
    school_surfaces = [r.surface for r in recs]
    if (
        IssueKind.AMBIGUITY not in flags
        or "Raffles Junior College" not in school_surfaces
        or "Raffles Institution" not in school_surfaces
    ):
        failures.append("ambiguous school")

    recs = recommend(snapshot, FieldKind.ORGANIZATION_NAME, "siemens", p)
    flags = classify_issues(snapshot, FieldKind.ORGANIZATION_NAME, "siemens", recs, p)
    if IssueKind.CASING not in flags or not recs or recs[0].surface != "Siemens":
        failures.append("lowercase organization")

    _verdict("scenario reproduction", not failures, ", ".join(failures))


# -- criterion: completeness threshold bracket -----------------------------

def test_acceptance_completeness_bracket(snapshot, walkthrough):
    doc = json.loads(serialize_profile(walkthrough))
    doc["sections"]["education"][0]["school_name"] = "Velmore University"
    in_25 = parse_profile(json.dumps(doc))
    doc["sections"]["education"][0]["school_name"] = "Northgate Polytechnic"
    in_15 = parse_profile(json.dumps(doc))

    cfg = EvalConfig(completeness_threshold=0.20)
    hits_25 = evaluate(snapshot, in_25, cfg).summary[SuggestionKind.SECTION_COMPLETENESS]
    hits_15 = evaluate(snapshot, in_15, cfg).summary[SuggestionKind.SECTION_COMPLETENESS]
    _verdict(
        "completeness threshold bracket",
        (hits_25, hits_15) == (1, 0),
        f"25%-cohort: {hits_25}, 15%-cohort: {hits_15}",
    )


# -- criterion: property suite ---------------------------------------------

def test_acceptance_property_suite(snapshot, walkthrough, showcase_lines, tmp_path):
    rng = random.Random(77)
    problems = []

    # threshold monotone / support-floor anti-monotone over random configs
    for _ in range(100):
        low, high = sorted((rng.random(), rng.random()))
        n_low = evaluate(
            snapshot, walkthrough, EvalConfig(completeness_threshold=low)
        ).summary[SuggestionKind.SECTION_COMPLETENESS]
        n_high = evaluate(
            snapshot, walkthrough, EvalConfig(completeness_threshold=high)
        ).summary[SuggestionKind.SECTION_COMPLETENESS]
        if n_high > n_low:
            problems.append(f"threshold monotonicity at ({low:.3f}, {high:.3f})")
            break
        s_low, s_high = sorted((rng.randint(1, 1500), rng.randint(1, 1500)))
        r_small = evaluate(
            snapshot, walkthrough, EvalConfig(match_params=MatchParams(s_min=s_low))
        )
        r_big = evaluate(
            snapshot, walkthrough, EvalConfig(match_params=MatchParams(s_min=s_high))
        )
        fields_small = len(r_small.suggestions) - r_small.summary[SuggestionKind.SECTION_COMPLETENESS]
        fields_big = len(r_big.suggestions) - r_big.summary[SuggestionKind.SECTION_COMPLETENESS]
        if fields_big > fields_small:
            problems.append(f"s_min anti-monotonicity at ({s_low}, {s_high})")
            break

    # normalization idempotence
    pool = string.ascii_letters + string.digits + " '.,()-/&’"
    for _ in range(500):
        s = "".join(rng.choice(pool) for _ in range(rng.randint(0, 25)))
        if normalize(normalize(s)) != normalize(s):
            problems.append(f"normalize not idempotent on {s!r}")
            break

    # distance metric axioms on 1000 random triples
    def rand_s():
        return "".join(rng.choice("abcde ") for _ in range(rng.randint(0, 12)))

    for _ in range(1000):
        x, y, z = rand_s(), rand_s(), rand_s()
        dxy, dyx = dl_distance(x, y), dl_distance(y, x)
        if dxy != dyx or (dxy == 0) != (x == y):
            problems.append("distance identity/symmetry")
            break
        if dl_distance(x, z) > dxy + dl_distance(y, z):
            problems.append(f"triangle inequality on {(x, y, z)!r}")
            break

    # parse/serialize round trip over a corpus sample
    for line in showcase_lines[::40]:
        profile = parse_profile(line)
        if parse_profile(serialize_profile(profile)) != profile:
            problems.append("profile round trip")
            break

    # snapshot save/load round trip
    snap_path = tmp_path / "roundtrip.bin"
    save_snapshot(snapshot, snap_path)
    if load_snapshot(snap_path) != snapshot:
        problems.append("snapshot round trip")

    # evaluation determinism, byte for byte
    one = canonical_json(report_to_dict(evaluate(snapshot, walkthrough)))
    two = canonical_json(report_to_dict(evaluate(snapshot, walkthrough)))
    if one != two:
        problems.append("evaluate determinism")

    _verdict("property suite", not problems, "; ".join(problems))


# -- criterion: performance envelope ---------------------------------------

def test_acceptance_ingest_under_ten_seconds(ingest_seconds):
    _, elapsed = ingest_seconds
    _verdict("ingest 10k profiles < 10 s", elapsed < 10.0, f"{elapsed:.2f}s")


def test_acceptance_suggest_latency(snapshot):
    import http.client
    import urllib.parse

    import uvicorn

    from cvlens.api import create_app
    from cvlens.config import AppConfig

    app = create_app(snapshot, AppConfig())
    config = uvicorn.Config(app, host="127.0.0.1", port=0, log_level="warning")
    server = uvicorn.Server(config)
    thread = threading.Thread(target=server.run, daemon=True)
    thread.start()
    deadline = time.time() + 10
    while not server.started:
        if time.time() > deadline:
            pytest.fail("server did not start")
        time.sleep(0.02)
    port = server.servers[0].sockets[0].getsockname()[1]

    queries = [
        ("DegreeName", "Master"),
        ("DegreeName", "Bsc"),
        ("JobTitle", "software engr"),
        ("JobTitle", "Teaching asistant"),
        ("SchoolName", "raffles"),
        ("OrganizationName", "siemens"),
        ("FieldOfStudy", "computer sci"),
        ("AwardTitle", "deans list"),
    ]
    paths = [
        "/api/suggest?" + urllib.parse.urlencode({"kind": kind, "q": q})
        for kind, q in queries
    ]
    latencies: list[float] = []
    lock = threading.Lock()
    errors: list[str] = []

    def worker(worker_id: int) -> None:
        local: list[float] = []
        conn = http.client.HTTPConnection("127.0.0.1", port, timeout=10.0)
        try:
            for i in range(25):
                path = paths[(worker_id + i) % len(paths)]
                t0 = time.perf_counter()
                conn.request("GET", path)
                resp = conn.getresponse()
                resp.read()
                local.append(time.perf_counter() - t0)
                if resp.status != 200:
                    with lock:
                        errors.append(f"{path} -> {resp.status}")
                    return
        finally:
            conn.close()
        with lock:
            latencies.extend(local)

    workers = [threading.Thread(target=worker, args=(i,)) for i in range(16)]
    for w in workers:
        w.start()
    for w in workers:
        w.join()
    server.should_exit = True
    thread.join(timeout=5)

    assert not errors, errors
    latencies.sort()
    p95 = latencies[int(len(latencies) * 0.95) - 1]
    _verdict(
        "p95 suggest latency < 50 ms under 16 clients",
        p95 < 0.050,
        f"p95 {p95 * 1000:.1f} ms over {len(latencies)} requests",
    )


# -- criterion: frozen walkthrough golden ----------------------------------

def test_acceptance_golden_walkthrough(snapshot, walkthrough):
    report = evaluate(snapshot, walkthrough, EvalConfig())
    got = canonical_json(report_to_dict(report))
    want = GOLDEN.read_text(encoding="utf-8")
    total = len(report.suggestions)
    completeness = report.summary[SuggestionKind.SECTION_COMPLETENESS]
    ok = got == want and total == 7 and completeness == 1
    _verdict(
        "golden walkthrough report",
        ok,
        f"{total} suggestions ({completeness} completeness + {total - completeness} field)",
    )

"""Tiny builders for handcrafted profile documents used across tests."""

from __future__ import annotations

import json


def make_doc(
    pid: str = "p1",
    source: str = "primary_network",
    first: str = "Ada",
    last: str = "Ling",
    sections: dict | None = None,
    **extra,
) -> str:
    doc = {
        "schema_version": 1,
        "id": pid,
        "source": source,
        "basic": {"first_name": first, "last_name": last},
        "sections": sections or {},
    }
    doc.update(extra)
    return json.dumps(doc, ensure_ascii=False)


def education(school: str = "", degree: str = "", end_year: int | None = None, **kw) -> dict:
    out = {"school_name": school, "degree_name": degree}
    if end_year is not None:
        out["end_year"] = end_year
    out.update(kw)
    return out


def experience(title: str = "", org: str = "", **kw) -> dict:
    out = {"title": title, "organization_name": org}
    out.update(kw)
    return out


def award(title: str = "", **kw) -> dict:
    out = {"title": title}
    out.update(kw)
    return out

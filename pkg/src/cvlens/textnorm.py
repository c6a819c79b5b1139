"""String normalization and matching primitives.

Everything here is a pure function over plain strings. Normalized keys are
the unit the corpus index groups by: lowercase, apostrophes deleted, all
other punctuation turned into spaces, whitespace collapsed.
"""

from __future__ import annotations

_APOSTROPHES = frozenset({"'", "’", "ʼ"})

TRIGRAM_PAD = "#"


def normalize(s: str) -> str:
    """Collapse a surface form to its normalized key.

    "Master's degree" -> "masters degree",
    "Bachelor of Science (B.Sc.)" -> "bachelor of science b sc".
    Idempotent: normalize(normalize(x)) == normalize(x).
    """
    lowered = s.lower()
    out = []
    for ch in lowered:
        if ch in _APOSTROPHES:
            continue
        out.append(ch if ch.isalnum() else " ")
    return " ".join("".join(out).split())


def tokens(key: str) -> list[str]:
    """Split a normalized key into its tokens."""
    return key.split()


def dl_distance(a: str, b: str) -> int:
    """Damerau-Levenshtein distance (insert, delete, substitute, adjacent
    transposition), unrestricted variant.

    The unrestricted form is a true metric (symmetric, triangle inequality),
    unlike the common "optimal string alignment" shortcut.
    """
    if a == b:
        return 0
    la, lb = len(a), len(b)
    if la == 0:
        return lb
    if lb == 0:
        return la

    big = la + lb
    # (la+2) x (lb+2) matrix with a sentinel border of `big`
    d = [[big] * (lb + 2) for _ in range(la + 2)]
    for i in range(la + 1):
        d[i + 1][1] = i
    for j in range(lb + 1):
        d[1][j + 1] = j

    last_row: dict[str, int] = {}
    for i in range(1, la + 1):
        ach = a[i - 1]
        last_col = 0
        for j in range(1, lb + 1):
            bch = b[j - 1]
            i1 = last_row.get(bch, 0)
            j1 = last_col
            if ach == bch:
                cost = 0
                last_col = j
            else:
                cost = 1
            d[i + 1][j + 1] = min(
                d[i][j] + cost,          # substitute or match
                d[i + 1][j] + 1,         # insert
                d[i][j + 1] + 1,         # delete
                d[i1][j1] + (i - i1 - 1) + 1 + (j - j1 - 1),  # transpose
            )
        last_row[ach] = i
    return d[la + 1][lb + 1]


def token_matches(q: str, c: str) -> bool:
    """Whether query token q stands for candidate token c.

    True on equality, or (for q of length >= 3) when q is a prefix of c or
    a subsequence of c starting with c's first character ("engr" for
    "engineer").
    """
    if q == c:
        return True
    if len(q) < 3:
        return False
    if c.startswith(q):
        return True
    if not c or q[0] != c[0]:
        return False
    it = iter(c)
    return all(ch in it for ch in q)


def _acronym_run(qt: str, ctoks: list[str], start: int) -> int:
    """Number of candidate tokens starting at `start` whose undelimited
    join equals qt ("bsc" == "b" + "sc"), or 0. Runs are at least 2 tokens;
    single-token matching is token_matches' job."""
    joined = ctoks[start]
    if not qt.startswith(joined):
        return 0
    k = start + 1
    while k < len(ctoks) and len(joined) < len(qt):
        joined += ctoks[k]
        k += 1
        if joined == qt:
            return k - start
        if not qt.startswith(joined):
            return 0
    return 0


def expansion_match(qkey: str, ckey: str) -> bool:
    """Whether candidate key ckey is an expansion of query key qkey.

    Every query token must be consumed left-to-right against the candidate
    tokens, either via token_matches against a single candidate token or by
    exactly equalling the join of a consecutive run of candidate tokens
    (acronyms that punctuation split apart, "bsc" vs "b sc"). The candidate
    must have at least as many tokens as the query and differ from it.
    """
    if not qkey or ckey == qkey:
        return False
    qtoks = qkey.split()
    ctoks = ckey.split()
    if len(ctoks) < len(qtoks):
        return False
    ci = 0
    for qt in qtoks:
        advanced = False
        while ci < len(ctoks):
            if token_matches(qt, ctoks[ci]):
                ci += 1
                advanced = True
                break
            run = _acronym_run(qt, ctoks, ci)
            if run:
                ci += run
                advanced = True
                break
            ci += 1
        if not advanced:
            return False
    return True


def trigrams(key: str, pad: str = TRIGRAM_PAD) -> set[str]:
    """Character trigrams of a normalized key.

    Keys shorter than 3 characters (including the empty key) yield a single
    padded gram so every indexed key stays reachable.
    """
    if len(key) < 3:
        return {(key + pad * 3)[:3]}
    return {key[i : i + 3] for i in range(len(key) - 2)}

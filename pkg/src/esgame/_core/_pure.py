"""Pure-Python kernel lane.

Mirrors _speedups.pyx exactly: same functions, same subset enumeration
order, same witnesses.  Used when the compiled extension is unavailable
(or forced via ESGAME_PURE=1) and as the reference in equivalence tests.
"""

from __future__ import annotations

from itertools import combinations

BACKEND = "pure"


def _sgn(s3, s2, n, a, b, c):
    # orientation sign of the triple, where index n denotes the added point
    if a == n:
        return s2[b][c]
    if b == n:
        return s2[c][a]
    if c == n:
        return s2[a][b]
    return s3[a][b][c]


def _convex_position(s3, s2, n, idx):
    # no member strictly inside a triangle of three others
    k = len(idx)
    for qi in range(k):
        q = idx[qi]
        rest = idx[:qi] + idx[qi + 1 :]
        for a, b, c in combinations(rest, 3):
            ref = _sgn(s3, s2, n, a, b, c)
            if (
                _sgn(s3, s2, n, a, b, q) == ref
                and _sgn(s3, s2, n, b, c, q) == ref
                and _sgn(s3, s2, n, c, a, q) == ref
            ):
                return False
    return True


def _gon_empty(s3, s2, n, idx, others):
    # empty iff no other point is strictly inside any triangle of vertices
    for q in others:
        for a, b, c in combinations(idx, 3):
            ref = _sgn(s3, s2, n, a, b, c)
            if (
                _sgn(s3, s2, n, a, b, q) == ref
                and _sgn(s3, s2, n, b, c, q) == ref
                and _sgn(s3, s2, n, c, a, q) == ref
            ):
                return False
    return True


def _as_lists(table):
    return table.tolist() if hasattr(table, "tolist") else table


def find_convex_gon(s3, n, k):
    """First k-subset (lex order) in convex position, or None."""
    s3 = _as_lists(s3)
    for idx in combinations(range(n), k):
        if _convex_position(s3, None, -1, idx):
            return idx
    return None


def find_empty_convex_gon(s3, n, k):
    """First k-subset (lex order) in convex position with no other input
    point strictly inside, or None."""
    s3 = _as_lists(s3)
    all_idx = range(n)
    for idx in combinations(all_idx, k):
        if _convex_position(s3, None, -1, idx):
            chosen = set(idx)
            others = [q for q in all_idx if q not in chosen]
            if _gon_empty(s3, None, -1, idx, others):
                return idx
    return None


def losing_addition(s3, s2, n, k, empty):
    """Does adding the extra point (index n, signs in s2) complete a
    convex k-gon (empty k-gon when `empty`)?

    Assumes the base position is alive, so any new gon uses the added
    point.  Returns the k-1 base indices of the first witness, or None.
    """
    s3 = _as_lists(s3)
    s2 = _as_lists(s2)
    for base in combinations(range(n), k - 1):
        idx = base + (n,)
        if _convex_position(s3, s2, n, idx):
            if not empty:
                return base
            chosen = set(base)
            others = [q for q in range(n) if q not in chosen]
            if _gon_empty(s3, s2, n, idx, others):
                return base
    return None

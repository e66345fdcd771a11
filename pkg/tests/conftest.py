"""Shared fixtures and independent brute-force oracles.

The oracles here are deliberately written against fractions.Fraction
with their own logic (halfplane scans, repeated peeling, subset
enumeration) so they share no code path with the package internals.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from random import Random

import pytest

from esgame.geometry import Point, point
from esgame.rational import Rational


def pt(x, y) -> Point:
    return point(x, y)


def as_fracs(p: Point) -> tuple[Fraction, Fraction]:
    # exact; collapses to plain ints for integer points (much faster
    # arithmetic, same results)
    if p.x.denominator == 1 and p.y.denominator == 1:
        return (int(p.x), int(p.y))
    return (
        Fraction(int(p.x.numerator), int(p.x.denominator)),
        Fraction(int(p.y.numerator), int(p.y.denominator)),
    )


def _cross(o, a, b) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def oracle_hull_members(points: list[Point]) -> set[tuple[Fraction, Fraction]]:
    """A point is a hull vertex iff some halfplane through it strictly
    contains all other points."""
    fracs = [as_fracs(p) for p in points]
    members = set()
    for i, cand in enumerate(fracs):
        others = [q for j, q in enumerate(fracs) if j != i]
        if not others:
            members.add(cand)
            continue
        for j, pivot in enumerate(fracs):
            if pivot == cand:
                continue
            side = [_cross(cand, pivot, q) for q in others if q != pivot]
            if all(s > 0 for s in side) or all(s < 0 for s in side):
                members.add(cand)
                break
    return members


def oracle_peel_layers(points: list[Point]) -> list[int]:
    """Layer sizes by repeatedly removing halfplane-oracle hull members."""
    remaining = list(points)
    sizes = []
    while remaining:
        if len(remaining) <= 2:
            sizes.append(len(remaining))
            break
        members = oracle_hull_members(remaining)
        layer = [p for p in remaining if as_fracs(p) in members]
        sizes.append(len(layer))
        remaining = [p for p in remaining if as_fracs(p) not in members]
    return sizes


def oracle_convex_position(points: list[Point]) -> bool:
    """Every point is a hull vertex (halfplane oracle)."""
    return len(oracle_hull_members(points)) == len(points)


def _oracle_strictly_inside(tri, q) -> bool:
    s = [_cross(tri[0], tri[1], q), _cross(tri[1], tri[2], q), _cross(tri[2], tri[0], q)]
    ref = _cross(tri[0], tri[1], tri[2])
    if ref < 0:
        s = [-v for v in s]
    return all(v > 0 for v in s)


def oracle_point_in_hull(points, q) -> bool:
    """Strictly inside the convex hull iff strictly inside some triangle."""
    fracs = [as_fracs(p) for p in points]
    fq = as_fracs(q)
    return any(
        _oracle_strictly_inside(tri, fq) for tri in combinations(fracs, 3)
    )


def oracle_convex_5gons(points: list[Point]) -> list[tuple[int, ...]]:
    return [
        idx
        for idx in combinations(range(len(points)), 5)
        if oracle_convex_position([points[i] for i in idx])
    ]


def oracle_empty_convex_5gons(points: list[Point]) -> list[tuple[int, ...]]:
    out = []
    for idx in oracle_convex_5gons(points):
        chosen = set(idx)
        others = [points[i] for i in range(len(points)) if i not in chosen]
        sub = [points[i] for i in idx]
        if not any(oracle_point_in_hull(sub, q) for q in others):
            out.append(idx)
    return out


def random_general_position(rng: Random, n: int, span: int = 1000) -> list[Point]:
    pts: list[Point] = []
    fracs: list[tuple[Fraction, Fraction]] = []
    while len(pts) < n:
        cand = (Fraction(rng.randint(-span, span)), Fraction(rng.randint(-span, span)))
        if cand in fracs:
            continue
        if any(
            _cross(fracs[i], fracs[j], cand) == 0
            for i in range(len(fracs))
            for j in range(i + 1, len(fracs))
        ):
            continue
        fracs.append(cand)
        pts.append(point(int(cand[0]), int(cand[1])))
    return pts


@pytest.fixture
def rng() -> Random:
    return Random(20240817)


SQUARE = [point(0, 0), point(4, 0), point(4, 4), point(0, 4)]
PENTAGON = [point(0, 0), point(4, 0), point(6, 3), point(3, 6), point(-1, 3)]

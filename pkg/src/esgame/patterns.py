"""Detection of convex / empty convex k-gons, layer-type signatures,
U(i,j) sub-4-gons, and classification into the named game-tree
configurations (4, 5.1, 5.2, 6.1, 6.2, 7.1, 7.2, 8).

Detection is brute-force subset enumeration over orientation-sign
tables; with at most ~10 points in every game use this is instant and
doubles as its own oracle.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import gcd
from typing import Optional, Sequence

from . import _core
from .errors import DegenerateInput, LayerCountMismatch
from .geometry import (
    Point,
    RegionClass,
    classify_region,
    clear_denominators,
    convex_hull,
    convex_layers,
    ensure_general_position,
    is_parallelogram,
    kicked_vertex_index,
    point_strictly_inside_convex,
)


@dataclass(frozen=True, slots=True)
class LayerType:
    sizes: tuple[int, ...]

    def __str__(self) -> str:
        return "(" + ",".join(str(s) for s in self.sizes) + ")"


@dataclass(frozen=True, slots=True)
class GonWitness:
    """Vertices of a detected (empty) convex 5-gon, CCW, with the
    indices of those vertices in the queried point list."""

    vertices: tuple[Point, ...]
    indices: tuple[int, ...]
    empty: bool


class ConfigurationLabel(enum.Enum):
    CONFIG_4 = "4"
    CONFIG_5_1 = "5.1"
    CONFIG_5_2 = "5.2"
    CONFIG_6_1 = "6.1"
    CONFIG_6_2 = "6.2"
    CONFIG_7_1 = "7.1"
    CONFIG_7_2 = "7.2"
    CONFIG_8 = "8"
    OTHER = "other"


def signs_table(points: Sequence[Point]):
    coords, _ = clear_denominators(points)
    return _core.signs3_table(coords)


def is_convex_position(points: Sequence[Point]) -> bool:
    """True iff every point is a hull vertex."""
    return len(convex_hull(points)) == len(points)


def _ccw_order(points: Sequence[Point], indices: Sequence[int]) -> tuple[int, ...]:
    # order subset indices counterclockwise (subset is in convex position)
    hull = convex_hull([points[i] for i in indices])
    by_coord = {(points[i].x, points[i].y): i for i in indices}
    return tuple(by_coord[(p.x, p.y)] for p in hull)


def _witness(points: Sequence[Point], idx: tuple[int, ...], empty: bool) -> GonWitness:
    order = _ccw_order(points, idx)
    return GonWitness(
        vertices=tuple(points[i] for i in order), indices=order, empty=empty
    )


def find_convex_kgon(points: Sequence[Point], k: int) -> Optional[GonWitness]:
    ensure_general_position(points)
    n = len(points)
    if n < k:
        return None
    idx = _core.find_convex_gon(signs_table(points), n, k)
    if idx is None:
        return None
    return _witness(points, idx, empty=False)


def find_empty_convex_kgon(points: Sequence[Point], k: int) -> Optional[GonWitness]:
    ensure_general_position(points)
    n = len(points)
    if n < k:
        return None
    idx = _core.find_empty_convex_gon(signs_table(points), n, k)
    if idx is None:
        return None
    return _witness(points, idx, empty=True)


def find_convex_5gon(points: Sequence[Point]) -> Optional[GonWitness]:
    """Some 5-subset in convex position, if one exists (exhaustive)."""
    return find_convex_kgon(points, 5)


def find_empty_convex_5gon(points: Sequence[Point]) -> Optional[GonWitness]:
    """Some empty convex 5-gon, if one exists (exhaustive)."""
    return find_empty_convex_kgon(points, 5)


@lru_cache(maxsize=512)
def _base_tables(key: tuple) -> tuple:
    points = [Point(x, y) for x, y in key]
    coords, scale = clear_denominators(points)
    return coords, scale, _core.signs3_table(coords)


def losing_witness(
    points: Sequence[Point], p: Point, k: int, empty: bool
) -> Optional[tuple[int, ...]]:
    """Indices (into points + [p], p last) of a convex / empty convex
    k-gon completed by adding p to an alive position, or None.

    Base-position tables are cached: orientation signs are invariant
    under positive scaling, so one table serves every candidate point.
    """
    key = tuple((q.x, q.y) for q in points)
    coords, scale, s3 = _base_tables(key)
    pden = int(p.x.denominator)
    pden = pden // gcd(pden, int(p.y.denominator)) * int(p.y.denominator)
    factor = pden // gcd(scale, pden)
    joint = scale * factor
    if factor == 1:
        base = coords
    else:
        base = [(x * factor, y * factor) for x, y in coords]
    px = int(p.x.numerator) * (joint // int(p.x.denominator))
    py = int(p.y.numerator) * (joint // int(p.y.denominator))
    s2 = _core.signs2_for_point(base, px, py)
    hit = _core.losing_addition(s3, s2, len(base), k, empty)
    if hit is None:
        return None
    return tuple(hit) + (len(base),)


def layer_type(points: Sequence[Point]) -> LayerType:
    return LayerType(tuple(len(layer) for layer in convex_layers(points)))


def enumerate_u4gons(
    points: Sequence[Point], i: int, j: int
) -> list[dict]:
    """All 4-subsets in convex position with exactly i points from the
    first convex layer and j from the second (i + j = 4), each flagged
    empty or not."""
    if i + j != 4:
        raise LayerCountMismatch("i + j must equal 4")
    layers = convex_layers(points)
    if len(layers) < 2:
        raise LayerCountMismatch("point set has fewer than 2 convex layers")
    keyset = lambda layer: {(p.x, p.y) for p in layer}
    first, second = keyset(layers[0]), keyset(layers[1])
    idx_first = [t for t, p in enumerate(points) if (p.x, p.y) in first]
    idx_second = [t for t, p in enumerate(points) if (p.x, p.y) in second]
    out = []
    for sel_i in combinations(idx_first, i):
        for sel_j in combinations(idx_second, j):
            idx = tuple(sorted(sel_i + sel_j))
            quad = [points[t] for t in idx]
            if not is_convex_position(quad):
                continue
            hull = convex_hull(quad)
            others = [p for t, p in enumerate(points) if t not in idx]
            empty = not any(point_strictly_inside_convex(hull, q) for q in others)
            out.append({"indices": idx, "vertices": tuple(hull), "empty": empty})
    return out


def _diagonal_center(hull: Sequence[Point]) -> Point:
    """Intersection of the diagonals of a convex quad."""
    a, b, c, d = hull
    # a + t*(c-a) on line bd: solve via cross products
    r, s = c - a, d - b
    denom = r.cross(s)
    t = (b - a).cross(s) / denom
    return Point(a.x + r.x * t, a.y + r.y * t)


def _diag_triangle_index(hull: Sequence[Point], center: Point, p: Point) -> Optional[int]:
    """Which of the four diagonal triangles (side i, side i+1, center)
    strictly contains p."""
    for i in range(4):
        tri = [hull[i], hull[(i + 1) % 4], center]
        if point_strictly_inside_convex(tri, p):
            return i
    return None


def _parallel(u: Point, v: Point) -> bool:
    return u.cross(v) == 0


def _interior_pair_symmetric(
    hull: Sequence[Point], inner: Sequence[Point], required_dirs: list[Point]
) -> bool:
    """Interior pair in opposite diagonal triangles with difference
    parallel to one of the given side directions."""
    center = _diagonal_center(hull)
    t0 = _diag_triangle_index(hull, center, inner[0])
    t1 = _diag_triangle_index(hull, center, inner[1])
    if t0 is None or t1 is None or (t0 - t1) % 4 != 2:
        return False
    diff = inner[1] - inner[0]
    return any(_parallel(diff, d) for d in required_dirs)


def _config5_2_parallelogram(hull: Sequence[Point], inner: Point) -> bool:
    """Some 3 hull points plus the interior point satisfy the
    parallelogram sum identity."""
    for drop in range(4):
        quad = [hull[t] for t in range(4) if t != drop] + [inner]
        if not is_convex_position(quad):
            continue
        if is_parallelogram(convex_hull(quad)):
            return True
    return False


def _distinct_i_regions(quad: Sequence[Point], outer: Sequence[Point]) -> bool:
    kicked = []
    for p in outer:
        if classify_region(quad, p) is not RegionClass.I:
            return False
        kicked.append(kicked_vertex_index(quad, p))
    return len(set(kicked)) == len(outer)


def classify_configuration(points: Sequence[Point]) -> ConfigurationLabel:
    """Assign the game-tree configuration label (or OTHER)."""
    n = len(points)
    if not 4 <= n <= 8:
        raise DegenerateInput("classification defined for 4..8 points")
    ensure_general_position(points)
    layers = convex_layers(points)
    sizes = tuple(len(layer) for layer in layers)
    hull = layers[0]

    if n == 4:
        if sizes == (4,) and is_parallelogram(hull):
            return ConfigurationLabel.CONFIG_4
        return ConfigurationLabel.OTHER

    if n == 5:
        if sizes != (4, 1):
            return ConfigurationLabel.OTHER
        inner = layers[1][0]
        five_one = is_parallelogram(hull)
        five_two = _config5_2_parallelogram(hull, inner)
        # hull parallelogram and interior-point parallelogram are mutually
        # exclusive in general position
        assert not (five_one and five_two), "ambiguous 5.1/5.2 classification"
        if five_one:
            return ConfigurationLabel.CONFIG_5_1
        if five_two:
            return ConfigurationLabel.CONFIG_5_2
        return ConfigurationLabel.OTHER

    if n == 6:
        if sizes != (4, 2):
            return ConfigurationLabel.OTHER
        inner = layers[1]
        side_dirs = [hull[1] - hull[0], hull[2] - hull[1]]
        if is_parallelogram(hull):
            if _interior_pair_symmetric(hull, inner, side_dirs):
                return ConfigurationLabel.CONFIG_6_1
            return ConfigurationLabel.OTHER
        # trapezoid: exactly one pair of parallel opposite sides
        par02 = _parallel(hull[1] - hull[0], hull[2] - hull[3])
        par13 = _parallel(hull[2] - hull[1], hull[3] - hull[0])
        if par02 == par13:
            return ConfigurationLabel.OTHER
        par_dir = hull[1] - hull[0] if par02 else hull[2] - hull[1]
        if _interior_pair_symmetric(hull, inner, [par_dir]):
            return ConfigurationLabel.CONFIG_6_2
        return ConfigurationLabel.OTHER

    if n == 7:
        if sizes == (3, 4):
            quad = layers[1]
            if is_parallelogram(quad) and _distinct_i_regions(quad, hull):
                return ConfigurationLabel.CONFIG_7_1
            return ConfigurationLabel.OTHER
        if sizes == (4, 3):
            if find_empty_convex_5gon(points) is None:
                return ConfigurationLabel.CONFIG_7_2
            return ConfigurationLabel.OTHER
        return ConfigurationLabel.OTHER

    if sizes == (4, 4) and _distinct_i_regions(layers[1], hull):
        return ConfigurationLabel.CONFIG_8
    return ConfigurationLabel.OTHER


def configuration_label_or_none(points: Sequence[Point]) -> Optional[ConfigurationLabel]:
    if 4 <= len(points) <= 8:
        return classify_configuration(points)
    return None

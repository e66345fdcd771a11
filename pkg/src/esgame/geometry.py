"""Exact planar geometry kernel: points, predicates, hulls, layers,
region classification and beam membership.

Every operation is decided by exact rational (ultimately integer)
arithmetic; there is no floating point anywhere in this module.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DegenerateInput, DegeneratePlacement, DuplicatePoint
from .rational import Rational, format_rational, lcm, parse_rational, rational, sign


class Orientation(enum.IntEnum):
    COUNTERCLOCKWISE = 1
    CLOCKWISE = -1
    COLLINEAR = 0


@dataclass(frozen=True, slots=True)
class Point:
    """Immutable exact rational point."""

    x: object
    y: object

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def scaled(self, factor) -> "Point":
        return Point(self.x * factor, self.y * factor)

    def cross(self, other: "Point") -> object:
        return self.x * other.y - self.y * other.x

    def as_strings(self) -> tuple[str, str]:
        return format_rational(self.x), format_rational(self.y)

    def __repr__(self) -> str:  # compact, canonical
        return f"Point({format_rational(self.x)}, {format_rational(self.y)})"


def point(x, y) -> Point:
    """Point from ints / strings / Rationals."""
    return Point(rational(x), rational(y))


def point_from_strings(xs: str, ys: str) -> Point:
    return Point(parse_rational(xs), parse_rational(ys))


def midpoint(a: Point, b: Point) -> Point:
    half = Rational(1, 2)
    return Point((a.x + b.x) * half, (a.y + b.y) * half)


def orientation(p: Point, q: Point, r: Point) -> Orientation:
    """Sign of the cross product (q - p) x (r - p)."""
    det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)
    return Orientation(sign(det))


def orient_sign(p: Point, q: Point, r: Point) -> int:
    return sign((q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x))


def _check_no_duplicates(points: Sequence[Point]) -> None:
    seen = set()
    for p in points:
        key = (p.x, p.y)
        if key in seen:
            raise DuplicatePoint(f"duplicate point {p!r}")
        seen.add(key)


def ensure_general_position(points: Sequence[Point]) -> None:
    """Raise DegenerateInput on any duplicate or collinear triple."""
    try:
        _check_no_duplicates(points)
    except DuplicatePoint as exc:
        raise DegenerateInput(str(exc)) from exc
    n = len(points)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if orient_sign(points[i], points[j], points[k]) == 0:
                    raise DegenerateInput(
                        f"collinear triple at indices {i},{j},{k}"
                    )


def convex_hull(points: Sequence[Point]) -> list[Point]:
    """Convex hull vertices in counterclockwise order.

    Collinear boundary points are excluded; starts at the
    lexicographically smallest vertex (deterministic output).
    """
    _check_no_duplicates(points)
    pts = sorted(points, key=lambda p: (p.x, p.y))
    if len(pts) <= 2:
        return pts
    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and orient_sign(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and orient_sign(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def convex_layers(points: Sequence[Point]) -> list[list[Point]]:
    """Peel convex hulls repeatedly; the layers partition the input."""
    _check_no_duplicates(points)
    remaining = list(points)
    layers: list[list[Point]] = []
    while remaining:
        hull = convex_hull(remaining)
        layers.append(hull)
        hull_keys = {(p.x, p.y) for p in hull}
        remaining = [p for p in remaining if (p.x, p.y) not in hull_keys]
    return layers


def point_strictly_inside_convex(poly: Sequence[Point], p: Point) -> bool:
    """Strict interior test against a convex CCW polygon."""
    for i in range(len(poly)):
        if orient_sign(poly[i], poly[(i + 1) % len(poly)], p) <= 0:
            return False
    return True


def is_parallelogram(quad: Sequence[Point]) -> bool:
    """Opposite-vertex sums equal, for 4 points given in hull (cyclic) order."""
    if len(quad) != 4:
        return False
    a, b, c, d = quad
    return a.x + c.x == b.x + d.x and a.y + c.y == b.y + d.y


class RegionClass(enum.Enum):
    I = "I"
    O = "O"
    S = "S"
    Z = "Z"


def _validate_quad(quad: Sequence[Point]) -> None:
    if len(quad) != 4:
        raise DegenerateInput("quad must have 4 points")
    for i in range(4):
        if orient_sign(quad[i], quad[(i + 1) % 4], quad[(i + 2) % 4]) <= 0:
            raise DegenerateInput("quad must be in convex position, CCW order")


def classify_region(quad: Sequence[Point], p: Point) -> RegionClass:
    """Which region of a convex 4-gon the point falls in.

    O: the five points are in convex position.  Z / I: layer type (4,1)
    with p interior / exterior.  S: layer type (3,2).
    """
    _validate_quad(quad)
    for i in range(4):
        for j in range(i + 1, 4):
            if orient_sign(quad[i], quad[j], p) == 0:
                raise DegeneratePlacement(
                    f"query point on the line through quad vertices {i},{j}"
                )
    pts = list(quad) + [p]
    layers = convex_layers(pts)
    sizes = tuple(len(layer) for layer in layers)
    if sizes == (5,):
        return RegionClass.O
    if sizes == (4, 1):
        inner = layers[1][0]
        if inner.x == p.x and inner.y == p.y:
            return RegionClass.Z
        return RegionClass.I
    if sizes == (3, 2):
        return RegionClass.S
    raise DegenerateInput(f"unexpected layer signature {sizes}")  # pragma: no cover


def kicked_vertex_index(quad: Sequence[Point], p: Point) -> int:
    """For p in an I region: index of the quad vertex that falls inside
    the hull of the other three plus p."""
    hull = convex_hull(list(quad) + [p])
    hull_keys = {(q.x, q.y) for q in hull}
    missing = [i for i in range(4) if (quad[i].x, quad[i].y) not in hull_keys]
    if len(missing) != 1:
        raise DegenerateInput("point is not in an I region")
    return missing[0]


class BeamKind(enum.Enum):
    TYPE1 = "type1"
    TYPE2 = "type2"


@dataclass(frozen=True, slots=True)
class Beam:
    """Type-1 beam A:BC (cone from rays AB, AC minus triangle ABC) or
    type-2 beam AB:CD (region bounded by segment AB and rays AD, BC,
    minus the convex 4-gon ABCD)."""

    kind: BeamKind
    anchors: tuple[Point, ...]

    def __post_init__(self):
        if self.kind is BeamKind.TYPE1:
            if len(self.anchors) != 3:
                raise DegenerateInput("type-1 beam needs 3 anchors")
            a, b, c = self.anchors
            if orient_sign(a, b, c) == 0:
                raise DegenerateInput("type-1 beam anchors are collinear")
        else:
            if len(self.anchors) != 4:
                raise DegenerateInput("type-2 beam needs 4 anchors")
            a, b, c, d = self.anchors
            s = orient_sign(a, b, c)
            if s == 0 or any(
                orient_sign(q[0], q[1], q[2]) != s
                for q in ((b, c, d), (c, d, a), (d, a, b))
            ):
                raise DegenerateInput(
                    "type-2 beam anchors must be in convex position in order"
                )


def type1_beam(a: Point, b: Point, c: Point) -> Beam:
    return Beam(BeamKind.TYPE1, (a, b, c))


def type2_beam(a: Point, b: Point, c: Point, d: Point) -> Beam:
    return Beam(BeamKind.TYPE2, (a, b, c, d))


def beam_contains(beam: Beam, p: Point) -> bool:
    """Strict membership: inside the cone/strip strictly and beyond the
    deleted polygon (its boundary excluded)."""
    if beam.kind is BeamKind.TYPE1:
        a, b, c = beam.anchors
        ref = orient_sign(a, b, c)
        # strictly inside the cone spanned by rays AB and AC
        if orient_sign(a, b, p) != ref or orient_sign(a, c, p) != -ref:
            return False
        # strictly beyond segment BC (off the triangle and its boundary)
        return orient_sign(b, c, p) == -orient_sign(b, c, a)
    a, b, c, d = beam.anchors
    # strictly between the lines carrying rays AD and BC
    if orient_sign(a, d, p) != orient_sign(a, d, b):
        return False
    if orient_sign(b, c, p) != orient_sign(b, c, a):
        return False
    # strictly beyond the far side DC
    return orient_sign(d, c, p) == -orient_sign(d, c, a)


def clear_denominators(points: Sequence[Point]) -> tuple[list[tuple[int, int]], int]:
    """Scale all coordinates by the common denominator lcm.

    Orientation predicates are invariant under positive scaling, so the
    integer image decides every sign exactly.
    """
    scale = 1
    for p in points:
        scale = lcm(scale, int(p.x.denominator))
        scale = lcm(scale, int(p.y.denominator))
    coords = [
        (
            int(p.x.numerator) * (scale // int(p.x.denominator)),
            int(p.y.numerator) * (scale // int(p.y.denominator)),
        )
        for p in points
    ]
    return coords, scale


def points_equal(a: Point, b: Point) -> bool:
    return a.x == b.x and a.y == b.y


def centroid(points: Iterable[Point]) -> Point:
    pts = list(points)
    inv = Rational(1, len(pts))
    sx = sum(p.x for p in pts)
    sy = sum(p.y for p in pts)
    return Point(sx * inv, sy * inv)

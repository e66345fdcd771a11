"""Face decomposition of the arrangement of all lines through point
pairs, clipped to a bounding box.

Each face becomes a Cell with an exact interior representative.  The
representative realizes one combinatorial extension of the position:
its orientation signs against every input-point pair are constant over
the whole (unclipped) face, so one representative stands for every
point of that face.

Coordinates are cleared to integers once per call; faces are walked on
the planar graph of line/box segments with exact integer direction
comparisons, and per-face sign vectors are propagated combinatorially
across shared edges (crossing an edge flips exactly that line's sign).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from math import gcd
from typing import Optional, Sequence

import numpy as np

from .errors import DegenerateInput
from .geometry import Point, clear_denominators
from .rational import Rational, sign

_BOX = -1  # provenance marker for box-boundary edges

# dyadic denominators tried when simplifying a representative
_SIMPLIFY_BITS = (0, 1, 2, 3, 4, 5, 6, 8, 10, 12, 16, 20, 24, 32, 40, 48, 64)


@dataclass(frozen=True, slots=True)
class Cell:
    """A face of the arrangement.

    halfplanes lists (i, j, side) for each line through input points i,j
    that carries an edge of the face; side = sign of
    orient(P_i, P_j, representative).  polygon is the clipped face
    outline (CCW).  bounded is False when the original (unclipped) face
    is unbounded.
    """

    representative: Point
    halfplanes: tuple[tuple[int, int, int], ...]
    bounded: bool
    polygon: tuple[Point, ...]
    pair_signs: tuple[tuple[int, int, int], ...]

    def sign_table(self, n: int) -> np.ndarray:
        """Antisymmetric n*n int8 table of orient(P_i, P_j, rep) signs."""
        table = np.zeros((n, n), dtype=np.int8)
        for i, j, s in self.pair_signs:
            table[i, j] = s
            table[j, i] = -s
        return table


class _Line:
    __slots__ = ("a", "b", "c", "i", "j", "sigma", "dx", "dy")

    def __init__(self, a: int, b: int, c: int, i: int, j: int, sigma: int):
        self.a, self.b, self.c = a, b, c
        self.i, self.j = i, j
        self.sigma = sigma  # orient(Pi,Pj,q) = -sigma * sign(a*qx+b*qy+c)
        self.dx, self.dy = b, -a  # integer direction along the line


def _build_lines(coords: list[tuple[int, int]]) -> list[_Line]:
    lines: list[_Line] = []
    seen: dict[tuple[int, int, int], tuple[int, int]] = {}
    n = len(coords)
    for i in range(n):
        xi, yi = coords[i]
        for j in range(i + 1, n):
            xj, yj = coords[j]
            a, b = yj - yi, xi - xj
            if a == 0 and b == 0:
                raise DegenerateInput(f"duplicate points {i},{j}")
            c = -(a * xi + b * yi)
            g = gcd(gcd(abs(a), abs(b)), abs(c))
            a, b, c = a // g, b // g, c // g
            sigma = 1
            if a < 0 or (a == 0 and b < 0):
                a, b, c, sigma = -a, -b, -c, -1
            key = (a, b, c)
            if key in seen:
                raise DegenerateInput(
                    f"collinear points: pairs {seen[key]} and {(i, j)} span one line"
                )
            seen[key] = (i, j)
            lines.append(_Line(a, b, c, i, j, sigma))
    return lines


def _intersect(l1: _Line, l2: _Line) -> Optional[tuple]:
    det = l1.a * l2.b - l2.a * l1.b
    if det == 0:
        return None
    x = Rational(l1.b * l2.c - l2.b * l1.c, det)
    y = Rational(l1.c * l2.a - l2.c * l1.a, det)
    return (x, y)


def _angle_cmp(d1: tuple[int, int], d2: tuple[int, int]) -> int:
    # CCW order starting at the positive x axis; no two edges at a vertex
    # share a direction, so ties cannot occur
    h1 = 0 if (d1[1] > 0 or (d1[1] == 0 and d1[0] > 0)) else 1
    h2 = 0 if (d2[1] > 0 or (d2[1] == 0 and d2[0] > 0)) else 1
    if h1 != h2:
        return -1 if h1 < h2 else 1
    cross = d1[0] * d2[1] - d1[1] * d2[0]
    if cross > 0:
        return -1
    if cross < 0:
        return 1
    return 0


def _round_dyadic(value, bits: int):
    num, den = int(value.numerator), int(value.denominator)
    scaled = (2 * num * (1 << bits) + den) // (2 * den)
    return Rational(scaled, 1 << bits)


def arrangement_cells(
    points: Sequence[Point], *, simplify: bool = False
) -> list[Cell]:
    """All faces of the line arrangement of the given points, clipped to
    an inflated bounding box.

    With simplify=True each representative is replaced by a nearby
    dyadic point realizing the identical orientation vector, keeping
    coordinate sizes small when representatives feed further rounds of
    geometry.
    """
    if len(points) < 2:
        raise DegenerateInput("arrangement needs at least 2 points")
    coords, scale = clear_denominators(points)
    lines = _build_lines(coords)
    m = len(lines)

    vertices: list[tuple] = []
    vertex_ids: dict[tuple, int] = {}

    def vid(pt: tuple) -> int:
        known = vertex_ids.get(pt)
        if known is None:
            known = len(vertices)
            vertex_ids[pt] = known
            vertices.append(pt)
        return known

    per_line_vertices: list[list[int]] = [[] for _ in range(m)]
    xs = [Rational(x) for x, _ in coords]
    ys = [Rational(y) for _, y in coords]
    for li in range(m):
        for lj in range(li + 1, m):
            pt = _intersect(lines[li], lines[lj])
            if pt is None:
                continue
            v = vid(pt)
            per_line_vertices[li].append(v)
            per_line_vertices[lj].append(v)
            xs.append(pt[0])
            ys.append(pt[1])

    # bounding box around all arrangement vertices and input points,
    # inflated by 10x the (L1) diagonal
    minx, maxx, miny, maxy = min(xs), max(xs), min(ys), max(ys)
    pad = 10 * ((maxx - minx) + (maxy - miny))
    if pad == 0:
        pad = Rational(10)
    x0, x1, y0, y1 = minx - pad, maxx + pad, miny - pad, maxy + pad

    # clip each line to the box: parametric interval over P(t) = p0 + t*d
    side_events: dict[str, list[int]] = {"S": [], "N": [], "W": [], "E": []}
    line_endpoints: list[tuple[int, int]] = []
    for line in lines:
        p0x, p0y = Rational(coords[line.i][0]), Rational(coords[line.i][1])
        dx, dy = line.dx, line.dy
        tlo, thi = None, None
        for d, p0, lo, hi in ((dx, p0x, x0, x1), (dy, p0y, y0, y1)):
            if d == 0:
                continue
            t_at_lo, t_at_hi = (lo - p0) / d, (hi - p0) / d
            if d < 0:
                t_at_lo, t_at_hi = t_at_hi, t_at_lo
            tlo = t_at_lo if tlo is None or t_at_lo > tlo else tlo
            thi = t_at_hi if thi is None or t_at_hi < thi else thi
        ptA = (p0x + dx * tlo, p0y + dy * tlo)
        ptB = (p0x + dx * thi, p0y + dy * thi)
        ends = []
        for pt in (ptA, ptB):
            v = vid(pt)
            ends.append(v)
            if pt[1] == y0:
                side_events["S"].append(v)
            elif pt[1] == y1:
                side_events["N"].append(v)
            elif pt[0] == x0:
                side_events["W"].append(v)
            elif pt[0] == x1:
                side_events["E"].append(v)
            else:  # pragma: no cover - clipping always lands on the box
                raise AssertionError("clip endpoint off the box boundary")
        line_endpoints.append((ends[0], ends[1]))

    # undirected edges: (u, v, provenance line index or _BOX, direction)
    edges: list[tuple[int, int, int, tuple[int, int]]] = []
    for li, line in enumerate(lines):
        evs = set(per_line_vertices[li])
        evs.update(line_endpoints[li])
        key = lambda v: vertices[v][0] * line.dx + vertices[v][1] * line.dy
        ordered = sorted(evs, key=key)
        for u, v in zip(ordered, ordered[1:]):
            edges.append((u, v, li, (line.dx, line.dy)))

    corners = {
        "SW": vid((x0, y0)),
        "SE": vid((x1, y0)),
        "NE": vid((x1, y1)),
        "NW": vid((x0, y1)),
    }
    box_sides = (
        ("S", corners["SW"], corners["SE"], (1, 0), lambda v: vertices[v][0]),
        ("E", corners["SE"], corners["NE"], (0, 1), lambda v: vertices[v][1]),
        ("N", corners["NE"], corners["NW"], (-1, 0), lambda v: -vertices[v][0]),
        ("W", corners["NW"], corners["SW"], (0, -1), lambda v: -vertices[v][1]),
    )
    for name, start, end, direction, key in box_sides:
        chain = sorted(set(side_events[name]) | {start, end}, key=key)
        for u, v in zip(chain, chain[1:]):
            edges.append((u, v, _BOX, direction))

    # directed half-edges; outgoing lists sorted CCW by exact angle
    nv = len(vertices)
    outgoing: list[list[int]] = [[] for _ in range(nv)]
    half_u: list[int] = []
    half_v: list[int] = []
    half_dir: list[tuple[int, int]] = []
    half_line: list[int] = []
    for u, v, prov, direction in edges:
        half_u.append(u)
        half_v.append(v)
        half_dir.append(direction)
        half_line.append(prov)
        outgoing[u].append(len(half_u) - 1)
        half_u.append(v)
        half_v.append(u)
        half_dir.append((-direction[0], -direction[1]))
        half_line.append(prov)
        outgoing[v].append(len(half_u) - 1)

    order_pos: dict[int, int] = {}
    cmp_key = cmp_to_key(_angle_cmp)
    for v in range(nv):
        outgoing[v].sort(key=lambda h: cmp_key(half_dir[h]))
        for pos, h in enumerate(outgoing[v]):
            order_pos[h] = pos

    def next_half(h: int) -> int:
        twin = h ^ 1
        ring = outgoing[half_u[twin]]
        return ring[(order_pos[twin] - 1) % len(ring)]

    face_of = [-1] * len(half_u)
    faces: list[list[int]] = []  # half-edge cycles
    for h0 in range(len(half_u)):
        if face_of[h0] != -1:
            continue
        cycle = []
        h = h0
        while face_of[h] == -1:
            face_of[h] = len(faces)
            cycle.append(h)
            h = next_half(h)
        faces.append(cycle)

    def cycle_area2(cycle: list[int]):
        total = 0
        for h in cycle:
            (ux, uy), (vx, vy) = vertices[half_u[h]], vertices[half_v[h]]
            total += ux * vy - uy * vx
        return total

    interior: list[int] = []
    outer = None
    for fi, cycle in enumerate(faces):
        a2 = cycle_area2(cycle)
        if a2 > 0:
            interior.append(fi)
        else:
            assert a2 < 0 and outer is None, "expected a single outer cycle"
            outer = fi
    # Euler check on the clipped planar subdivision
    assert nv - len(edges) + len(faces) == 2, "planar graph is inconsistent"

    # per-face sign vector over lines, propagated across shared edges
    face_signs: dict[int, list[int]] = {}
    face_centroid: dict[int, tuple] = {}
    for fi in interior:
        cycle = faces[fi]
        k = len(cycle)
        cx = sum(vertices[half_u[h]][0] for h in cycle) / k
        cy = sum(vertices[half_u[h]][1] for h in cycle) / k
        face_centroid[fi] = (cx, cy)

    def direct_signs(fi: int) -> list[int]:
        cx, cy = face_centroid[fi]
        out = []
        for line in lines:
            s = sign(line.a * cx + line.b * cy + line.c)
            assert s != 0, "face centroid on an arrangement line"
            out.append(s)
        return out

    pending = list(interior)
    while pending:
        seed = pending[0]
        if seed in face_signs:
            pending.pop(0)
            continue
        face_signs[seed] = direct_signs(seed)
        stack = [seed]
        while stack:
            fi = stack.pop()
            for h in faces[fi]:
                li = half_line[h]
                if li == _BOX:
                    continue
                nb = face_of[h ^ 1]
                if nb == outer or nb in face_signs:
                    continue
                flipped = list(face_signs[fi])
                flipped[li] = -flipped[li]
                face_signs[nb] = flipped
                stack.append(nb)

    inv_scale = Rational(1, scale)
    cells: list[Cell] = []
    seen_signatures: set[tuple[int, ...]] = set()
    for fi in interior:
        cycle = faces[fi]
        signs = face_signs[fi]
        signature = tuple(signs)
        assert signature not in seen_signatures, "duplicate face signature"
        seen_signatures.add(signature)

        bounding = sorted({half_line[h] for h in cycle if half_line[h] != _BOX})
        touches_box = any(half_line[h] == _BOX for h in cycle)
        rep_scaled = face_centroid[fi]
        if simplify:
            rep_scaled = _simplify_rep(
                rep_scaled, lines, signs, scale, (x0, x1, y0, y1)
            )
        rep = Point(rep_scaled[0] * inv_scale, rep_scaled[1] * inv_scale)
        polygon = tuple(
            Point(vertices[half_u[h]][0] * inv_scale, vertices[half_u[h]][1] * inv_scale)
            for h in cycle
        )
        halfplanes = tuple(
            (lines[li].i, lines[li].j, -lines[li].sigma * signs[li])
            for li in bounding
        )
        pair_signs = tuple(
            (line.i, line.j, -line.sigma * signs[li])
            for li, line in enumerate(lines)
        )
        cells.append(
            Cell(
                representative=rep,
                halfplanes=halfplanes,
                bounded=not touches_box,
                polygon=polygon,
                pair_signs=pair_signs,
            )
        )
    return cells


def _simplify_rep(rep_scaled, lines, signs, scale, box):
    """Nearby dyadic point (in original coordinates) realizing the same
    orientation vector; falls back to the exact centroid."""
    x0, x1, y0, y1 = box
    cx, cy = rep_scaled[0] / scale, rep_scaled[1] / scale
    for bits in _SIMPLIFY_BITS:
        qx, qy = _round_dyadic(cx, bits), _round_dyadic(cy, bits)
        sx, sy = qx * scale, qy * scale
        if not (x0 < sx < x1 and y0 < sy < y1):
            continue
        ok = True
        for li, line in enumerate(lines):
            if sign(line.a * sx + line.b * sy + line.c) != signs[li]:
                ok = False
                break
        if ok:
            return (sx, sy)
    return rep_scaled

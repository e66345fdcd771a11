"""Player 2's move selection and the exact AND-OR game solver.

Fast paths implement the explicit constructions (parallelogram at step
4, parallel-offset placement at step 6, cone placement at step 8); each
output is validated by the detectors and any failure falls back to an
exhaustive search over arrangement cells, so correctness never depends
on the constructions alone.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from .arrangement import Cell, arrangement_cells
from .errors import DegenerateInput, DepthExceeded, NoFeasiblePoint, NoWinningMove
from .geometry import (
    Point,
    convex_hull,
    convex_layers,
    ensure_general_position,
    is_parallelogram,
    kicked_vertex_index,
    orient_sign,
)
from .patterns import (
    ConfigurationLabel,
    classify_configuration,
    find_convex_5gon,
    find_convex_kgon,
    find_empty_convex_kgon,
    losing_witness,
    signs_table,
)
from .rational import Rational


class GameVariant(enum.Enum):
    CONVEX = "convex"
    EMPTY = "empty"

    @property
    def empty_polygons(self) -> bool:
        return self is GameVariant.EMPTY


def completes_loss(
    points: Sequence[Point], p: Point, variant: GameVariant, k: int = 5
) -> Optional[tuple[int, ...]]:
    """Witness indices if adding p to an alive position completes the
    variant's losing polygon."""
    return losing_witness(points, p, k, variant.empty_polygons)


# ---------------------------------------------------------------------------
# step 4: parallelogram completion


def construct_parallelogram(triangle: Sequence[Point]) -> Point:
    """Fourth point completing the triangle to a parallelogram;
    lexicographically smallest of the three completions."""
    if len(triangle) != 3:
        raise DegenerateInput("need exactly 3 points")
    a, b, c = triangle
    if orient_sign(a, b, c) == 0:
        raise DegenerateInput("triangle is degenerate")
    candidates = [
        Point(a.x + b.x - c.x, a.y + b.y - c.y),
        Point(a.x + c.x - b.x, a.y + c.y - b.y),
        Point(b.x + c.x - a.x, b.y + c.y - a.y),
    ]
    valid = [
        p
        for p in candidates
        if classify_configuration(list(triangle) + [p]) is ConfigurationLabel.CONFIG_4
    ]
    assert valid, "a triangle always has parallelogram completions"
    return min(valid, key=lambda p: (p.x, p.y))


# ---------------------------------------------------------------------------
# step 6: reach configuration 6.1 / 6.2


def _line_in_halfplanes(
    origin: Point, direction: Point, constraints: list[tuple[Point, Point, int]]
) -> tuple[Rational, Rational]:
    """Parameter interval of {origin + t*direction} subject to strict
    orient(u, v, .) == side constraints; all constraints here bound a
    nonempty finite interval."""
    lo, hi = None, None
    for u, v, side in constraints:
        edge = v - u
        alpha = edge.cross(origin - u)
        beta = edge.cross(direction)
        # require sign(alpha + t*beta) == side
        if beta == 0:
            if (1 if alpha > 0 else -1 if alpha < 0 else 0) != side:
                raise NoFeasiblePoint("parallel constraint violated")
            continue
        bound = Rational(-alpha) / Rational(beta)
        if (beta > 0) == (side > 0):
            lo = bound if lo is None or bound > lo else lo
        else:
            hi = bound if hi is None or bound < hi else hi
    if lo is None or hi is None or not lo < hi:
        raise NoFeasiblePoint("empty feasible interval")
    return lo, hi


def _midpoint_on_line(origin: Point, direction: Point, lo, hi) -> Point:
    t = (lo + hi) * Rational(1, 2)
    return Point(origin.x + direction.x * t, origin.y + direction.y * t)


def _sixth_from_5_1(hull: Sequence[Point], inner: Point) -> Point:
    center = Point(
        (hull[0].x + hull[2].x) * Rational(1, 2),
        (hull[0].y + hull[2].y) * Rational(1, 2),
    )
    side = None
    for i in range(4):
        tri = (hull[i], hull[(i + 1) % 4], center)
        if all(
            orient_sign(tri[t], tri[(t + 1) % 3], inner) > 0 for t in range(3)
        ):
            side = i
            break
    if side is None:
        raise NoFeasiblePoint("interior point not in a diagonal triangle")
    direction = hull[(side + 2) % 4] - hull[(side + 1) % 4]
    target = (hull[(side + 2) % 4], hull[(side + 3) % 4], center)
    constraints = [
        (target[t], target[(t + 1) % 3], 1) for t in range(3)
    ]
    lo, hi = _line_in_halfplanes(inner, direction, constraints)
    return _midpoint_on_line(inner, direction, lo, hi)


def _sixth_from_5_2(hull: Sequence[Point], inner: Point) -> Point:
    # recover the parallelogram: drop one hull vertex, add the interior point
    for drop in range(4):
        quad = [hull[t] for t in range(4) if t != drop] + [inner]
        para = convex_hull(quad)
        if len(para) != 4:
            continue
        if not is_parallelogram(para):
            continue
        fifth = hull[drop]
        x_idx = next(
            t for t in range(4) if para[t].x == inner.x and para[t].y == inner.y
        )
        u = para[(x_idx + 1) % 4]
        w = para[(x_idx - 1) % 4]
        o = para[(x_idx + 2) % 4]
        # which half of the cone at the interior vertex the 5th point is in
        s = orient_sign(inner, o, fifth)
        if s == 0:
            continue
        faced = u if s == orient_sign(inner, o, u) else w
        opposite_of_faced = w if faced is u else u
        direction = faced - inner
        constraints = [
            # strictly inside the cone at the faced vertex
            (faced, inner, -orient_sign(faced, inner, o)),
            (faced, o, -orient_sign(faced, o, inner)),
            # on the interior vertex's side of the faced vertex's diagonal
            (
                faced,
                opposite_of_faced,
                orient_sign(faced, opposite_of_faced, inner),
            ),
        ]
        lo, hi = _line_in_halfplanes(fifth, direction, constraints)
        return _midpoint_on_line(fifth, direction, lo, hi)
    raise NoFeasiblePoint("no parallelogram with the interior point found")


def construct_sixth(points: Sequence[Point], variant: GameVariant) -> Point:
    """Sixth point reaching configuration 6.1 (from 5.1) or 6.2 (from
    5.2), validated, with a cell-search fallback."""
    label = classify_configuration(points)
    if label not in (ConfigurationLabel.CONFIG_5_1, ConfigurationLabel.CONFIG_5_2):
        raise DegenerateInput(f"construct_sixth needs 5.1/5.2, got {label}")
    layers = convex_layers(points)
    hull, inner = layers[0], layers[1][0]
    try:
        if label is ConfigurationLabel.CONFIG_5_1:
            cand = _sixth_from_5_1(hull, inner)
            expected = ConfigurationLabel.CONFIG_6_1
        else:
            cand = _sixth_from_5_2(hull, inner)
            expected = ConfigurationLabel.CONFIG_6_2
        if _valid_sixth(points, cand, expected):
            return cand
    except NoFeasiblePoint:
        pass
    # fallback: cells whose representative yields label 6.1/6.2
    for cell in _sorted_cells(points):
        rep = cell.representative
        if completes_loss(points, rep, variant) is not None:
            continue
        if _valid_sixth(points, rep, None):
            return rep
    raise NoFeasiblePoint("no feasible sixth point; violates the reach-6 lemma")


def _valid_sixth(
    points: Sequence[Point], cand: Point, expected: Optional[ConfigurationLabel]
) -> bool:
    new = list(points) + [cand]
    try:
        ensure_general_position(new)
    except DegenerateInput:
        return False
    # player 2's move must complete no convex 5-gon at all (which also
    # rules out empty ones)
    if find_convex_5gon(new) is not None:
        return False
    label = classify_configuration(new)
    if expected is not None:
        return label is expected
    return label in (ConfigurationLabel.CONFIG_6_1, ConfigurationLabel.CONFIG_6_2)


# ---------------------------------------------------------------------------
# step 8: reach configuration 8


def _cone_candidates(quad: Sequence[Point], free: int) -> list[Point]:
    """Deterministic points fanned inside the I cone at quad[free]."""
    v = quad[free]
    d1 = v - quad[(free - 1) % 4]
    d2 = v - quad[(free + 1) % 4]
    out = []
    for a, b in ((1, 1), (2, 1), (1, 2), (4, 1), (1, 4)):
        for num, den in ((1, 4), (1, 16), (1, 64), (1, 2), (1, 1), (4, 1), (1, 256)):
            t = Rational(num, den)
            out.append(
                Point(
                    v.x + (d1.x * a + d2.x * b) * t,
                    v.y + (d1.y * a + d2.y * b) * t,
                )
            )
    return out


def _valid_eighth(points: Sequence[Point], cand: Point, variant: GameVariant) -> bool:
    new = list(points) + [cand]
    try:
        ensure_general_position(new)
    except DegenerateInput:
        return False
    if completes_loss(points, cand, variant) is not None:
        return False
    return classify_configuration(new) is ConfigurationLabel.CONFIG_8


def _eighth_candidates(points: Sequence[Point]) -> list[Point]:
    layers = convex_layers(points)
    sizes = tuple(len(layer) for layer in layers)
    cands: list[Point] = []
    if sizes == (3, 4):
        quad = layers[1]
        kicked = {kicked_vertex_index(quad, p) for p in layers[0]}
        free = next(t for t in range(4) if t not in kicked)
        cands.extend(_cone_candidates(quad, free))
    elif sizes == (4, 3):
        hull, tri = layers[0], layers[1]
        for w in hull:
            quad = convex_hull(list(tri) + [w])
            if len(quad) != 4:
                continue
            rest = [p for p in hull if p is not w]
            kicked = set()
            ok = True
            for p in rest:
                try:
                    kicked.add(kicked_vertex_index(quad, p))
                except DegenerateInput:
                    ok = False
                    break
            if not ok or len(kicked) != 3:
                continue
            free = next(t for t in range(4) if t not in kicked)
            cands.extend(_cone_candidates(quad, free))
        # second family: the new point joins the inner layer directly
        for drop in range(3):
            a = tri[(drop + 1) % 3]
            b = tri[(drop + 2) % 3]
            c = tri[drop]
            mirror = Point(a.x + b.x - c.x, a.y + b.y - c.y)
            for num, den in ((1, 1), (3, 4), (1, 2), (5, 4), (1, 4)):
                t = Rational(num, den)
                cands.append(
                    Point(c.x + (mirror.x - c.x) * t, c.y + (mirror.y - c.y) * t)
                )
    return cands


def _sorted_cells(points: Sequence[Point]) -> list[Cell]:
    cells = arrangement_cells(points, simplify=True)
    cells.sort(key=lambda cell: (cell.representative.x, cell.representative.y))
    return cells


def construct_eighth(points: Sequence[Point], variant: GameVariant) -> Point:
    """Eighth point turning configuration 7.1/7.2 into configuration 8.

    Tries deterministic cone candidates first; falls back to scanning
    all arrangement cells in representative order.  The reach-8 lemma
    guarantees a feasible cell exists.
    """
    label = classify_configuration(points)
    if label not in (ConfigurationLabel.CONFIG_7_1, ConfigurationLabel.CONFIG_7_2):
        raise DegenerateInput(f"construct_eighth needs 7.1/7.2, got {label}")
    for cand in _eighth_candidates(points):
        if _valid_eighth(points, cand, variant):
            return cand
    for cell in _sorted_cells(points):
        if _valid_eighth(points, cell.representative, variant):
            return cell.representative
    raise NoFeasiblePoint("no feasible eighth point; violates the reach-8 lemma")


# ---------------------------------------------------------------------------
# move selection


def choose_move(state) -> Point:
    """Player 2's move for the given referee state (even steps only)."""
    moves = list(state.moves)
    step = len(moves) + 1
    if step % 2 == 1:
        raise DegenerateInput("choose_move plays even steps only")
    if getattr(state, "finished", None):
        raise DegenerateInput("game is over")
    variant = state.variant
    if step == 2:
        # any general-position point works: all 2-point positions are
        # affinely equivalent
        return Point(moves[0].x + 1, moves[0].y)
    label = classify_configuration(moves) if 4 <= len(moves) <= 8 else None
    if step == 4:
        return construct_parallelogram(moves)
    if step == 6 and label in (
        ConfigurationLabel.CONFIG_5_1,
        ConfigurationLabel.CONFIG_5_2,
    ):
        return construct_sixth(moves, variant)
    if step == 8 and label in (
        ConfigurationLabel.CONFIG_7_1,
        ConfigurationLabel.CONFIG_7_2,
    ):
        return construct_eighth(moves, variant)
    return _winning_cell_search(moves, variant)


def _winning_cell_search(points: Sequence[Point], variant: GameVariant) -> Point:
    """Any move from which the solver certifies a Player-2 win."""
    for cell in _sorted_cells(points):
        rep = cell.representative
        if completes_loss(points, rep, variant) is not None:
            continue
        result = solve_and_or(list(points) + [rep], variant, 5, 9)
        if isinstance(result, WinCertificate):
            return rep
    raise NoWinningMove("position is outside the strategy tree and lost")


# ---------------------------------------------------------------------------
# AND-OR solver


@dataclass
class CertNode:
    step: int
    move: Optional[Point]
    witness: Optional[tuple[int, ...]] = None
    children: list["CertNode"] = field(default_factory=list)

    def to_json(self) -> dict:
        out: dict = {"step": self.step}
        if self.move is not None:
            out["move"] = {"x": self.move.as_strings()[0], "y": self.move.as_strings()[1]}
        if self.witness is not None:
            out["witness"] = list(self.witness)
        if self.children:
            out["children"] = [c.to_json() for c in self.children]
        return out


@dataclass
class WinCertificate:
    """Proof tree that the mover-to-lose loses by max_step."""

    variant: GameVariant
    k: int
    root: CertNode
    forced_depth: int
    earliest_depth: int
    leaf_count: int

    def to_json(self) -> dict:
        return {
            "variant": self.variant.value,
            "k": self.k,
            "forced_depth": self.forced_depth,
            "earliest_depth": self.earliest_depth,
            "leaf_count": self.leaf_count,
            "tree": self.root.to_json(),
        }


@dataclass
class Refutation:
    """A line of play escaping beyond max_step."""

    variant: GameVariant
    k: int
    path: list[Point]

    def to_json(self) -> dict:
        return {
            "variant": self.variant.value,
            "k": self.k,
            "escape": [
                {"x": p.as_strings()[0], "y": p.as_strings()[1]} for p in self.path
            ],
        }


def _signature(points: Sequence[Point]) -> tuple:
    table = signs_table(points)
    return (len(points), table.tobytes())


def solve_and_or(
    points: Sequence[Point],
    variant: GameVariant,
    k: int,
    max_step: int,
    policy: Optional[Callable[[list[Point], GameVariant], Point]] = None,
):
    """Exact adversarial search: the mover at odd steps branches over all
    arrangement cells, the engine at even steps needs one winning cell
    (or follows the supplied policy).

    Returns a WinCertificate that Player 1 is forced to complete the
    losing polygon by max_step, or a Refutation path.  Memoized on the
    orientation-vector signature of the position; verdicts therefore
    hold over representative realizations.
    """
    if not 3 <= k <= 5:
        raise DegenerateInput("k must be 3, 4 or 5")
    if len(points) + 1 > max_step:
        raise DepthExceeded("position already at or beyond max_step")
    pts = list(points)
    ensure_general_position(pts)
    if len(pts) >= k:
        detector = find_empty_convex_kgon if variant.empty_polygons else find_convex_kgon
        if detector(pts, k) is not None:
            raise DegenerateInput("position already contains the losing polygon")
    memo: dict[tuple, object] = {}

    def search(current: list[Point]):
        step = len(current) + 1
        if step > max_step:
            return Refutation(variant, k, [])
        if len(current) >= 3:
            key = _signature(current)
            hit = memo.get(key)
            if hit is not None:
                return hit
        mover_is_p1 = step % 2 == 1
        result = _expand(current, step, mover_is_p1)
        if len(current) >= 3:
            memo[key] = result
        return result

    def _expand(current: list[Point], step: int, mover_is_p1: bool):
        # canonical seeds while fewer than two points are down: all such
        # positions are equivalent under orientation-preserving affine maps
        if len(current) < 2:
            move = (
                Point(Rational(0), Rational(0))
                if not current
                else Point(current[0].x + 1, current[0].y)
            )
            sub = search(current + [move])
            if isinstance(sub, Refutation):
                return Refutation(variant, k, [move] + sub.path)
            node = CertNode(step=step, move=move, children=[sub.root])
            return WinCertificate(
                variant, k, node, sub.forced_depth, sub.earliest_depth, sub.leaf_count
            )

        cells = _sorted_cells(current)
        losing: list[tuple[Point, tuple[int, ...]]] = []
        alive: list[Point] = []
        for cell in cells:
            rep = cell.representative
            w = completes_loss(current, rep, variant, k)
            if w is None:
                alive.append(rep)
            else:
                losing.append((rep, w))

        if mover_is_p1:
            children = [
                CertNode(step=step, move=rep, witness=w) for rep, w in losing
            ]
            if not alive:
                node = CertNode(step=step, move=None, children=children)
                return WinCertificate(variant, k, node, step, step, len(children))
            forced, earliest, leaves = 0, None, len(children)
            for rep in alive:
                sub = search(current + [rep])
                if isinstance(sub, Refutation):
                    return Refutation(variant, k, [rep] + sub.path)
                child = CertNode(step=step, move=rep, children=[sub.root])
                children.append(child)
                forced = max(forced, sub.forced_depth)
                earliest = (
                    sub.earliest_depth
                    if earliest is None
                    else min(earliest, sub.earliest_depth)
                )
                leaves += sub.leaf_count
            node = CertNode(step=step, move=None, children=children)
            return WinCertificate(variant, k, node, forced, earliest, leaves)

        # engine to move
        if policy is not None:
            move = policy(current, variant)
            if completes_loss(current, move, variant, k) is not None:
                return Refutation(variant, k, [move])
            sub = search(current + [move])
            if isinstance(sub, Refutation):
                return Refutation(variant, k, [move] + sub.path)
            node = CertNode(step=step, move=move, children=[sub.root])
            return WinCertificate(
                variant, k, node, sub.forced_depth, sub.earliest_depth, sub.leaf_count
            )
        last_refutation = None
        for rep in alive:
            sub = search(current + [rep])
            if isinstance(sub, WinCertificate):
                node = CertNode(step=step, move=rep, children=[sub.root])
                return WinCertificate(
                    variant, k, node, sub.forced_depth, sub.earliest_depth, sub.leaf_count
                )
            last_refutation = Refutation(variant, k, [rep] + sub.path)
        if last_refutation is None:
            # engine itself is forced to complete the polygon
            last_refutation = Refutation(variant, k, [])
        return last_refutation

    return search(pts)


def losing_cells(
    points: Sequence[Point], variant: GameVariant, *, simplify: bool = False
) -> list[Cell]:
    """Cells whose representative completes the variant's losing polygon."""
    return [
        cell
        for cell in arrangement_cells(points, simplify=simplify)
        if completes_loss(points, cell.representative, variant) is not None
    ]

from random import Random

import pytest

from esgame.arrangement import arrangement_cells
from esgame.errors import DegenerateInput
from esgame.geometry import (
    RegionClass,
    classify_region,
    orient_sign,
    point,
    point_strictly_inside_convex,
)

from conftest import SQUARE, random_general_position


def test_two_points_two_cells():
    cells = arrangement_cells([point(0, 0), point(1, 0)])
    assert len(cells) == 2
    sides = {cell.halfplanes[0][2] for cell in cells}
    assert sides == {1, -1}


def test_triangle_seven_faces():
    cells = arrangement_cells([point(0, 0), point(1, 0), point(0, 1)])
    assert len(cells) == 7
    signatures = {cell.pair_signs for cell in cells}
    assert len(signatures) == 7  # all orientation vectors distinct
    assert sum(1 for cell in cells if cell.bounded) == 1


def test_collinear_rejected():
    with pytest.raises(DegenerateInput):
        arrangement_cells([point(0, 0), point(1, 1), point(2, 2)])


def test_parallelogram_cells_classify_IOZ_only():
    # the paper's step-5 region picture: a parallelogram has no S region
    cells = arrangement_cells(SQUARE, simplify=True)
    tally = {}
    for cell in cells:
        region = classify_region(SQUARE, cell.representative)
        tally[region] = tally.get(region, 0) + 1
    assert set(tally) == {RegionClass.I, RegionClass.O, RegionClass.Z}
    assert tally[RegionClass.I] == 8  # each vertex cone split by a diagonal
    assert tally[RegionClass.O] == 4
    assert tally[RegionClass.Z] == 4


def test_representative_invariants(rng):
    for _ in range(12):
        pts = random_general_position(rng, 6, span=60)
        for cell in arrangement_cells(pts):
            rep = cell.representative
            for i, j, side in cell.halfplanes:
                assert orient_sign(pts[i], pts[j], rep) == side
            for i, j, side in cell.pair_signs:
                assert orient_sign(pts[i], pts[j], rep) == side
                assert side != 0


def test_perturbation_within_cell_keeps_signs(rng):
    # midpoint of the representative and any cell vertex is still strictly
    # interior (convex face), so no orientation sign may change
    from esgame.geometry import Point

    pts = random_general_position(rng, 5, span=40)
    for cell in arrangement_cells(pts):
        rep = cell.representative
        for vertex in cell.polygon:
            mid = Point((rep.x + vertex.x) / 2, (rep.y + vertex.y) / 2)
            for i, j, side in cell.pair_signs:
                assert orient_sign(pts[i], pts[j], mid) == side


def test_simplified_representative_same_cell(rng):
    for _ in range(8):
        pts = random_general_position(rng, 5, span=50)
        plain = arrangement_cells(pts)
        simple = arrangement_cells(pts, simplify=True)
        assert len(plain) == len(simple)
        plain_sigs = {cell.pair_signs for cell in plain}
        for cell in simple:
            assert cell.pair_signs in plain_sigs
            # simplified representatives stay small
            assert cell.representative.x.denominator <= 1 << 64


def test_representative_inside_polygon(rng):
    pts = random_general_position(rng, 5, span=50)
    for cell in arrangement_cells(pts, simplify=True):
        assert point_strictly_inside_convex(cell.polygon, cell.representative)


def test_every_unclipped_face_realized_for_single_line():
    # one line: both halfplanes appear even though both faces are unbounded
    cells = arrangement_cells([point(0, 0), point(7, 3)])
    assert len(cells) == 2
    assert all(not cell.bounded for cell in cells)

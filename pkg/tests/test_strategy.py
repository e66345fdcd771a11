from random import Random
from types import SimpleNamespace

import pytest

from esgame.errors import DegenerateInput
from esgame.geometry import RegionClass, classify_region, convex_layers, point
from esgame.patterns import (
    ConfigurationLabel,
    classify_configuration,
    enumerate_u4gons,
    find_convex_5gon,
    find_empty_convex_5gon,
)
from esgame.strategy import (
    GameVariant,
    Refutation,
    WinCertificate,
    choose_move,
    completes_loss,
    construct_eighth,
    construct_parallelogram,
    construct_sixth,
    losing_cells,
    solve_and_or,
)

from conftest import SQUARE, random_general_position
from test_patterns import CONFIG_6_1, CONFIG_7_1


def _shim(moves, variant=GameVariant.EMPTY):
    return SimpleNamespace(moves=list(moves), variant=variant, finished=None)


class TestConstructParallelogram:
    def test_first_example(self):
        # completions are (4,-4), (-4,4), (4,4); lexicographic picks (-4,4)
        result = construct_parallelogram([point(0, 0), point(4, 0), point(0, 4)])
        assert (result.x, result.y) == (-4, 4)

    def test_second_example(self):
        result = construct_parallelogram([point(0, 0), point(2, 0), point(1, 3)])
        assert (result.x, result.y) == (-1, 3)

    def test_output_classifies_config4(self, rng):
        for _ in range(25):
            tri = random_general_position(rng, 3)
            fourth = construct_parallelogram(tri)
            assert (
                classify_configuration(tri + [fourth])
                is ConfigurationLabel.CONFIG_4
            )

    def test_degenerate_rejected(self):
        with pytest.raises(DegenerateInput):
            construct_parallelogram([point(0, 0), point(1, 1), point(2, 2)])


class TestConstructSixth:
    def test_from_5_1_square_example(self):
        pts = [point(0, 4), point(0, 0), point(4, 0), point(4, 4), point(2, 1)]
        assert classify_configuration(pts) is ConfigurationLabel.CONFIG_5_1
        for variant in GameVariant:
            sixth = construct_sixth(pts, variant)
            new = pts + [sixth]
            assert classify_configuration(new) is ConfigurationLabel.CONFIG_6_1
            assert find_empty_convex_5gon(new) is None

    def test_from_5_2(self):
        pts = [point(0, 0), point(4, 0), point(9, 8), point(0, 4), point(4, 4)]
        assert classify_configuration(pts) is ConfigurationLabel.CONFIG_5_2
        for variant in GameVariant:
            sixth = construct_sixth(pts, variant)
            new = pts + [sixth]
            assert classify_configuration(new) is ConfigurationLabel.CONFIG_6_2
            assert find_empty_convex_5gon(new) is None

    def test_output_avoids_every_o_region_of_empty_u4gons(self):
        # the placed point may not fall in an O region of any empty convex
        # 4-gon of the 5-point set (that would complete an empty 5-gon)
        pts = [point(0, 4), point(0, 0), point(4, 0), point(4, 4), point(2, 1)]
        sixth = construct_sixth(pts, GameVariant.EMPTY)
        from itertools import combinations

        from esgame.geometry import convex_hull, point_strictly_inside_convex
        from esgame.patterns import is_convex_position

        for idx in combinations(range(5), 4):
            quad = [pts[i] for i in idx]
            if not is_convex_position(quad):
                continue
            hull = convex_hull(quad)
            others = [pts[i] for i in range(5) if i not in idx]
            if any(point_strictly_inside_convex(hull, q) for q in others):
                continue
            assert classify_region(hull, sixth) is not RegionClass.O

    def test_wrong_label_rejected(self):
        # a (3,2)-type 5-point set is neither 5.1 nor 5.2
        pts = [point(0, 0), point(10, 0), point(0, 10), point(2, 1), point(1, 3)]
        assert classify_configuration(pts) is ConfigurationLabel.OTHER
        with pytest.raises(DegenerateInput):
            construct_sixth(pts, GameVariant.EMPTY)

    def test_affine_equivariance_of_fast_path(self):
        # the parallel-offset construction commutes with any
        # orientation-preserving rational affine map
        from esgame.geometry import Point
        from esgame.rational import Rational

        pts = [point(0, 4), point(0, 0), point(4, 0), point(4, 4), point(2, 1)]
        sixth = construct_sixth(pts, GameVariant.EMPTY)
        a, b, c, d, tx, ty = (
            Rational(2),
            Rational(1),
            Rational(1, 3),
            Rational(1),
            Rational(-7),
            Rational(2),
        )
        assert a * d - b * c > 0
        apply = lambda p: Point(a * p.x + b * p.y + tx, c * p.x + d * p.y + ty)
        mapped_sixth = construct_sixth([apply(p) for p in pts], GameVariant.EMPTY)
        expected = apply(sixth)
        assert mapped_sixth.x == expected.x and mapped_sixth.y == expected.y


class TestConstructEighth:
    def test_from_7_1(self):
        for variant in GameVariant:
            eighth = construct_eighth(CONFIG_7_1, variant)
            new = CONFIG_7_1 + [eighth]
            assert classify_configuration(new) is ConfigurationLabel.CONFIG_8
            assert completes_loss(CONFIG_7_1, eighth, variant) is None

    def test_from_7_2(self):
        # any feasible addition to a 6.1 position lands in configuration
        # 7.2; take the first non-losing cell
        from esgame.arrangement import arrangement_cells

        pts = None
        for cell in arrangement_cells(CONFIG_6_1, simplify=True):
            rep = cell.representative
            if completes_loss(CONFIG_6_1, rep, GameVariant.EMPTY) is None:
                pts = CONFIG_6_1 + [rep]
                break
        assert pts is not None
        assert classify_configuration(pts) is ConfigurationLabel.CONFIG_7_2
        for variant in GameVariant:
            if completes_loss(pts[:-1], pts[-1], variant) is not None:
                continue
            eighth = construct_eighth(pts, variant)
            new = pts + [eighth]
            assert classify_configuration(new) is ConfigurationLabel.CONFIG_8
            assert completes_loss(pts, eighth, variant) is None

    def test_empty_variant_on_7_2_with_nonempty_5gon(self):
        # the (I,O,O,O)-style case: a 7.2 position containing a convex
        # 5-gon that is not empty is legal in the empty game; the engine
        # still reaches configuration 8.  Build one from a 6.1 position by
        # taking a cell that loses the convex game but not the empty game.
        from esgame.arrangement import arrangement_cells

        found = None
        for cell in arrangement_cells(CONFIG_6_1, simplify=True):
            rep = cell.representative
            if completes_loss(CONFIG_6_1, rep, GameVariant.EMPTY) is not None:
                continue
            if completes_loss(CONFIG_6_1, rep, GameVariant.CONVEX) is None:
                continue
            pts = CONFIG_6_1 + [rep]
            if classify_configuration(pts) is ConfigurationLabel.CONFIG_7_2:
                found = pts
                break
        assert found is not None, "no (I,O,O,O)-style cell on this instance"
        assert find_convex_5gon(found) is not None
        eighth = construct_eighth(found, GameVariant.EMPTY)
        new = found + [eighth]
        assert classify_configuration(new) is ConfigurationLabel.CONFIG_8
        assert find_empty_convex_5gon(new) is None


class TestChooseMove:
    def test_step4_delegates_to_parallelogram(self):
        tri = [point(0, 0), point(6, 1), point(2, 5)]
        move = choose_move(_shim(tri))
        assert (
            classify_configuration(tri + [move]) is ConfigurationLabel.CONFIG_4
        )

    def test_step6_reaches_6x(self):
        pts = [point(0, 4), point(0, 0), point(4, 0), point(4, 4), point(2, 1)]
        move = choose_move(_shim(pts))
        assert classify_configuration(pts + [move]) is ConfigurationLabel.CONFIG_6_1

    def test_odd_step_rejected(self):
        with pytest.raises(DegenerateInput):
            choose_move(_shim([point(0, 0), point(1, 0)]))

    def test_never_completes_losing_polygon(self, rng):
        from esgame.verify import simulate_strategy_game

        for variant in GameVariant:
            for _ in range(5):
                state = simulate_strategy_game(variant, rng)
                assert state.step == 9 and state.finished.loser == 1


class TestSolver:
    @pytest.mark.parametrize("variant", list(GameVariant))
    def test_k3_ends_at_3(self, variant):
        result = solve_and_or([], variant, 3, max_step=5)
        assert isinstance(result, WinCertificate)
        assert result.forced_depth == 3 and result.earliest_depth == 3

    @pytest.mark.parametrize("variant", list(GameVariant))
    def test_k4_ends_at_5(self, variant):
        result = solve_and_or([], variant, 4, max_step=7)
        assert isinstance(result, WinCertificate)
        assert result.forced_depth == 5 and result.earliest_depth == 5

    def test_too_small_bound_refuted(self):
        result = solve_and_or([], GameVariant.CONVEX, 4, max_step=4)
        assert isinstance(result, Refutation)

    def test_certificate_serializes(self):
        result = solve_and_or([], GameVariant.CONVEX, 3, max_step=3)
        payload = result.to_json()
        assert payload["forced_depth"] == 3
        assert "tree" in payload

    def test_deterministic(self):
        a = solve_and_or([], GameVariant.EMPTY, 4, max_step=5).to_json()
        b = solve_and_or([], GameVariant.EMPTY, 4, max_step=5).to_json()
        assert a == b


class TestLosingCells:
    def test_parallelogram_empty_variant_losing_iff_O(self):
        from esgame.arrangement import arrangement_cells

        losing_sigs = {c.pair_signs for c in losing_cells(SQUARE, GameVariant.EMPTY)}
        for cell in arrangement_cells(SQUARE):
            region = classify_region(SQUARE, cell.representative)
            assert (cell.pair_signs in losing_sigs) == (region is RegionClass.O)

    def test_four_points_never_bad(self, rng):
        from esgame.arrangement import arrangement_cells

        for _ in range(10):
            pts = random_general_position(rng, 4, span=50)
            assert len(losing_cells(pts, GameVariant.CONVEX)) < len(
                arrangement_cells(pts)
            )

    def test_config8_all_cells_losing(self):
        from esgame.arrangement import arrangement_cells
        from esgame.verify import config8_samples

        pts = list(config8_samples(1, seed=11)[0])
        assert len(losing_cells(pts, GameVariant.EMPTY)) == len(arrangement_cells(pts))

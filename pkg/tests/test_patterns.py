from random import Random

import pytest

from esgame.errors import DegenerateInput, LayerCountMismatch
from esgame.geometry import Point, centroid, point
from esgame.patterns import (
    ConfigurationLabel,
    classify_configuration,
    enumerate_u4gons,
    find_convex_5gon,
    find_empty_convex_5gon,
    is_convex_position,
    layer_type,
)

from conftest import (
    PENTAGON,
    SQUARE,
    oracle_convex_5gons,
    oracle_empty_convex_5gons,
    oracle_peel_layers,
    random_general_position,
)

# a configuration-6.1 instance: parallelogram hull, symmetric interior pair
CONFIG_6_1 = [
    point(0, 0),
    point(4, 0),
    point(6, 3),
    point(2, 3),
    point(3, 1),
    point(4, "5/2"),
]

# a configuration-7.1 instance derived from the 6.2 -> S-region step:
# outer triangle {E, F, p}, inner parallelogram {A, B, C, D}
CONFIG_7_1 = [
    point(-1, "-1/2"),  # E
    point(1, 0),        # B
    point(1, 1),        # C
    point(-1, "3/2"),   # F
    point(0, 0),        # A
    point(0, 1),        # D
    point(6, "-1/8"),   # p: beyond the EB/FC convergence, in B's I cone
]


class TestConvexPosition:
    def test_pentagon(self):
        assert is_convex_position(PENTAGON)

    def test_square_plus_center(self):
        assert not is_convex_position(SQUARE + [point(2, 2)])

    def test_any_triangle(self):
        assert is_convex_position([point(0, 0), point(5, 1), point(2, 9)])


class TestFindConvex5gon:
    def test_pentagon_witness_is_all_points(self):
        witness = find_convex_5gon(PENTAGON)
        assert witness is not None and sorted(witness.indices) == [0, 1, 2, 3, 4]

    def test_parallelogram_plus_interior_none(self):
        assert find_convex_5gon(SQUARE + [point(2, 1)]) is None

    def test_nine_random_points_always_contain_one(self, rng):
        # the forcing threshold for convex 5-gons is nine points
        for _ in range(25):
            pts = random_general_position(rng, 9)
            assert find_convex_5gon(pts) is not None

    def test_matches_oracle(self, rng):
        for _ in range(30):
            pts = random_general_position(rng, 7)
            expected = oracle_convex_5gons(pts)
            got = find_convex_5gon(pts)
            assert (got is not None) == bool(expected)
            if got is not None:
                assert tuple(sorted(got.indices)) in expected


class TestFindEmptyConvex5gon:
    def test_pentagon_alone(self):
        witness = find_empty_convex_5gon(PENTAGON)
        assert witness is not None and witness.empty

    def test_pentagon_plus_centroid_none(self):
        pts = PENTAGON + [centroid(PENTAGON)]
        assert oracle_empty_convex_5gons(pts) == []
        assert find_empty_convex_5gon(pts) is None

    def test_432_always_has_one(self, rng):
        from esgame.verify import sample_layer_type

        for _ in range(10):
            sample = sample_layer_type(rng, (4, 3, 2))
            assert find_empty_convex_5gon(list(sample.points)) is not None

    def test_matches_oracle(self, rng):
        for _ in range(25):
            pts = random_general_position(rng, 8)
            expected = oracle_empty_convex_5gons(pts)
            got = find_empty_convex_5gon(pts)
            assert (got is not None) == bool(expected)
            if got is not None:
                assert tuple(sorted(got.indices)) in expected

    def test_no_convex_implies_no_empty(self, rng):
        for _ in range(40):
            pts = random_general_position(rng, 7)
            if find_convex_5gon(pts) is None:
                assert find_empty_convex_5gon(pts) is None


class TestLayerType:
    def test_square_plus_interior(self):
        assert layer_type(SQUARE + [point(2, 1)]).sizes == (4, 1)

    def test_nested_squares_plus_center(self):
        inner = [point(1, 1), point(3, 1), point(3, 3), point(1, 3)]
        pts = SQUARE + inner + [point(2, "3/2")]
        assert layer_type(pts).sizes == (4, 4, 1)

    def test_matches_peeling_oracle(self, rng):
        for _ in range(40):
            pts = random_general_position(rng, 8)
            assert list(layer_type(pts).sizes) == oracle_peel_layers(pts)


class TestU4gons:
    def test_config_6_1_has_exactly_four_empty_u22(self):
        assert classify_configuration(CONFIG_6_1) is ConfigurationLabel.CONFIG_6_1
        u22 = enumerate_u4gons(CONFIG_6_1, 2, 2)
        empties = [entry for entry in u22 if entry["empty"]]
        assert len(empties) == 4
        # every U(2,2) empty 4-gon uses both interior points
        for entry in empties:
            assert {4, 5}.issubset(entry["indices"])

    def test_square_plus_interior_no_u22(self):
        # second layer has a single point: no U(2,2) subsets exist
        assert enumerate_u4gons(SQUARE + [point(2, 1)], 2, 2) == []

    def test_config_7_1_single_u04(self):
        assert classify_configuration(CONFIG_7_1) is ConfigurationLabel.CONFIG_7_1
        u04 = enumerate_u4gons(CONFIG_7_1, 0, 4)
        assert len(u04) == 1

    def test_i_j_must_sum_to_four(self):
        with pytest.raises(LayerCountMismatch):
            enumerate_u4gons(CONFIG_6_1, 2, 1)


class TestClassifier:
    def test_config4(self):
        assert classify_configuration(SQUARE) is ConfigurationLabel.CONFIG_4

    def test_config4_requires_parallelogram(self):
        quad = [point(0, 0), point(4, 0), point(5, 3), point(0, 4)]
        assert classify_configuration(quad) is ConfigurationLabel.OTHER

    def test_config5_1(self):
        assert (
            classify_configuration(SQUARE + [point(2, 1)])
            is ConfigurationLabel.CONFIG_5_1
        )

    def test_config5_2(self):
        pts = [point(0, 0), point(4, 0), point(9, 8), point(0, 4), point(4, 4)]
        assert classify_configuration(pts) is ConfigurationLabel.CONFIG_5_2

    def test_config6_1(self):
        assert classify_configuration(CONFIG_6_1) is ConfigurationLabel.CONFIG_6_1

    def test_config8_from_strategy(self, rng):
        from esgame.strategy import GameVariant
        from esgame.verify import config8_samples

        pts = list(config8_samples(1, seed=99)[0])
        assert classify_configuration(pts) is ConfigurationLabel.CONFIG_8
        assert find_empty_convex_5gon(pts) is None

    def test_labels_imply_no_empty_5gon(self, rng):
        # spot-check the stated inclusion on strategy-generated positions
        from esgame.verify import config8_samples

        for pts_t in config8_samples(3, seed=5):
            assert find_empty_convex_5gon(list(pts_t)) is None

    def test_wrong_size_rejected(self):
        with pytest.raises(DegenerateInput):
            classify_configuration([point(0, 0), point(1, 0)])

    def test_detectors_invariant_under_relabeling(self, rng):
        for _ in range(15):
            pts = random_general_position(rng, 8)
            base_convex = find_convex_5gon(pts) is not None
            base_empty = find_empty_convex_5gon(pts) is not None
            shuffled = pts[:]
            rng.shuffle(shuffled)
            assert (find_convex_5gon(shuffled) is not None) == base_convex
            assert (find_empty_convex_5gon(shuffled) is not None) == base_empty

    def test_affine_invariance(self, rng):
        # labels survive orientation-preserving rational affine maps
        from esgame.rational import Rational

        instances = [
            SQUARE,
            SQUARE + [point(2, 1)],
            CONFIG_6_1,
            CONFIG_7_1,
        ]
        maps = [
            (Rational(2), Rational(1), Rational(0), Rational(1), Rational(3), Rational(-2)),
            (Rational(1), Rational(0), Rational(1, 2), Rational(1), Rational(-5), Rational(7)),
        ]
        for pts in instances:
            base = classify_configuration(pts)
            for a, b, c, d, tx, ty in maps:
                assert a * d - b * c > 0
                mapped = [
                    Point(a * p.x + b * p.y + tx, c * p.x + d * p.y + ty)
                    for p in pts
                ]
                assert classify_configuration(mapped) is base

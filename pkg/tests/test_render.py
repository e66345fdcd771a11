from random import Random

from esgame.geometry import RegionClass, classify_region, point, point_from_strings
from esgame.referee import apply_move, new_game
from esgame.render import overlay_from_cells, render_svg
from esgame.strategy import GameVariant, losing_cells
from esgame.verify import config8_samples, simulate_strategy_game

from conftest import SQUARE


def test_empty_state_is_valid_svg():
    svg = render_svg(new_game(GameVariant.CONVEX))
    assert svg.startswith("<svg") and svg.endswith("</svg>")


def test_finished_game_has_nine_glyphs(rng):
    state = simulate_strategy_game(GameVariant.EMPTY, rng)
    svg = render_svg(state)
    assert svg.count('class="move-point"') == 9
    assert svg.count("<polygon") >= 2  # layers plus the highlighted witness


def test_deterministic(rng):
    state = simulate_strategy_game(GameVariant.EMPTY, rng)
    assert render_svg(state) == render_svg(state)


def test_config4_overlay_regions_are_exactly_O():
    state = new_game(GameVariant.EMPTY)
    for p in SQUARE:
        apply_move(state, p)
    cells = losing_cells(state.moves, state.variant)
    overlay = overlay_from_cells(cells)
    assert len(overlay["losing_regions"]) == 4  # the four O wedges
    for cell in cells:
        assert classify_region(SQUARE, cell.representative) is RegionClass.O
    svg = render_svg(state, overlay)
    assert svg.count('fill-opacity="0.25"') == 4


def test_overlay_polygons_only_cover_losing_ground():
    # spot check: an interior point of each overlay polygon re-tests as
    # a losing placement
    from esgame.geometry import Point, centroid
    from esgame.strategy import completes_loss

    state = new_game(GameVariant.EMPTY)
    for p in SQUARE:
        apply_move(state, p)
    for cell in losing_cells(state.moves, state.variant):
        inner = centroid(cell.polygon)
        assert completes_loss(state.moves, inner, state.variant) is not None


def test_config8_overlay_covers_every_cell():
    from esgame.arrangement import arrangement_cells

    pts = list(config8_samples(1, seed=31)[0])
    state = new_game(GameVariant.EMPTY)
    for p in pts:
        apply_move(state, p)
    cells = losing_cells(pts, GameVariant.EMPTY)
    assert len(cells) == len(arrangement_cells(pts))
    svg = render_svg(state, overlay_from_cells(cells))
    assert svg.count('fill-opacity="0.25"') == len(cells)

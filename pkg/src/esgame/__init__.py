"""Exact-arithmetic engine, referee and verifier for the two-player
convex / empty-convex 5-gon avoidance game."""

from ._core import BACKEND as KERNEL_BACKEND
from .arrangement import Cell, arrangement_cells
from .geometry import (
    Beam,
    BeamKind,
    Orientation,
    Point,
    RegionClass,
    beam_contains,
    classify_region,
    convex_hull,
    convex_layers,
    orientation,
    point,
    type1_beam,
    type2_beam,
)
from .patterns import (
    ConfigurationLabel,
    GonWitness,
    LayerType,
    classify_configuration,
    enumerate_u4gons,
    find_convex_5gon,
    find_empty_convex_5gon,
    is_convex_position,
    layer_type,
)
from .referee import (
    Finished,
    GameState,
    MoveOutcome,
    apply_move,
    new_game,
    state_from_trace,
    state_to_trace,
    trace_round_trip,
)
from .strategy import (
    GameVariant,
    Refutation,
    WinCertificate,
    choose_move,
    construct_eighth,
    construct_parallelogram,
    construct_sixth,
    losing_cells,
    solve_and_or,
)
from .verify import (
    VerificationReport,
    verify_config8_closure,
    verify_layered_lemma,
    verify_no_bad_small,
    verify_strategy_tree,
)

__version__ = "0.1.0"

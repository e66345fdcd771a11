"""Game state machine: turn order, general-position enforcement, end
detection, loser determination and trace (de)serialization.

Status is a pure function of (variant, moves): replaying an accepted
move sequence reproduces identical statuses at every step.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from .errors import (
    DuplicatePoint,
    GameAlreadyFinished,
    GeneralPositionViolation,
    InvariantViolation,
    MalformedTrace,
)
from .geometry import Point, convex_hull, orient_sign, point_from_strings
from .patterns import ConfigurationLabel, classify_configuration
from .strategy import GameVariant, completes_loss


@dataclass(frozen=True, slots=True)
class Finished:
    loser: int  # 1 or 2
    witness: tuple[int, ...]  # move indices of the completed 5-gon, CCW


@dataclass
class GameState:
    variant: GameVariant
    moves: list[Point] = field(default_factory=list)
    finished: Optional[Finished] = None

    @property
    def step(self) -> int:
        return len(self.moves)

    @property
    def is_ongoing(self) -> bool:
        return self.finished is None


@dataclass(frozen=True, slots=True)
class MoveOutcome:
    accepted: bool
    finished: Optional[Finished]
    step: int
    label: Optional[ConfigurationLabel]
    engine_reply: Optional[Point] = None


def new_game(variant: GameVariant) -> GameState:
    return GameState(variant=variant)


def _ccw_witness(moves: list[Point], indices: tuple[int, ...]) -> tuple[int, ...]:
    hull = convex_hull([moves[i] for i in indices])
    by_coord = {(moves[i].x, moves[i].y): i for i in indices}
    return tuple(by_coord[(p.x, p.y)] for p in hull)


def apply_move(state: GameState, p: Point) -> MoveOutcome:
    """Validate and apply a move; the mover who completes the variant's
    losing polygon loses immediately."""
    if state.finished is not None:
        raise GameAlreadyFinished("game is over")
    for q in state.moves:
        if q.x == p.x and q.y == p.y:
            raise DuplicatePoint(f"point {p!r} already placed")
    n = len(state.moves)
    for i in range(n):
        for j in range(i + 1, n):
            if orient_sign(state.moves[i], state.moves[j], p) == 0:
                raise GeneralPositionViolation(
                    f"move is collinear with moves {i} and {j}"
                )
    witness = completes_loss(state.moves, p, state.variant)
    state.moves.append(p)
    label: Optional[ConfigurationLabel] = None
    if witness is not None:
        mover = 1 if len(state.moves) % 2 == 1 else 2
        state.finished = Finished(
            loser=mover, witness=_ccw_witness(state.moves, witness)
        )
    elif 4 <= len(state.moves) <= 8:
        label = classify_configuration(state.moves)
    return MoveOutcome(
        accepted=True,
        finished=state.finished,
        step=len(state.moves),
        label=label,
    )


# ---------------------------------------------------------------------------
# trace serialization (schema fixed: see External Interfaces)


def state_to_trace(state: GameState) -> dict:
    status: object = "ongoing"
    if state.finished is not None:
        status = {
            "loser": state.finished.loser,
            "witness": list(state.finished.witness),
        }
    return {
        "variant": state.variant.value,
        "moves": [
            {"x": p.as_strings()[0], "y": p.as_strings()[1]} for p in state.moves
        ],
        "status": status,
    }


def state_from_trace(trace: dict) -> GameState:
    """Rebuild a state by replaying the trace; any invariant the trace
    claims but replay does not reproduce is rejected."""
    if not isinstance(trace, dict):
        raise MalformedTrace("trace must be an object")
    try:
        variant = GameVariant(trace["variant"])
        raw_moves = trace["moves"]
        status = trace["status"]
    except (KeyError, ValueError, TypeError) as exc:
        raise MalformedTrace(f"missing or invalid trace field: {exc}") from exc
    if not isinstance(raw_moves, list):
        raise MalformedTrace("moves must be a list")
    state = new_game(variant)
    for entry in raw_moves:
        try:
            p = point_from_strings(entry["x"], entry["y"])
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedTrace(f"bad move entry {entry!r}") from exc
        try:
            apply_move(state, p)
        except (DuplicatePoint, GeneralPositionViolation, GameAlreadyFinished) as exc:
            raise InvariantViolation(str(exc)) from exc
    if status == "ongoing":
        if state.finished is not None:
            raise InvariantViolation("trace claims ongoing but replay finished")
    else:
        if not isinstance(status, dict):
            raise MalformedTrace("status must be 'ongoing' or an object")
        if state.finished is None:
            raise InvariantViolation("trace claims finished but replay is ongoing")
        if status.get("loser") != state.finished.loser or tuple(
            status.get("witness", ())
        ) != state.finished.witness:
            raise InvariantViolation("trace status disagrees with replay")
    return state


def trace_round_trip(state: GameState) -> GameState:
    """Serialize then rebuild; the result equals the input state."""
    return state_from_trace(json.loads(json.dumps(state_to_trace(state))))


def states_equal(a: GameState, b: GameState) -> bool:
    if a.variant is not b.variant or a.finished != b.finished:
        return False
    if len(a.moves) != len(b.moves):
        return False
    return all(
        p.x == q.x and p.y == q.y for p, q in zip(a.moves, b.moves)
    )

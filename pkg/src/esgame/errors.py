"""Exception types shared across the package."""


class EsgameError(Exception):
    """Base class for all domain errors."""

    code = "error"


class DuplicatePoint(EsgameError):
    code = "duplicate_point"


class DegenerateInput(EsgameError):
    """Input violates a precondition (collinear triple, bad polygon, ...)."""

    code = "degenerate_input"


class DegeneratePlacement(EsgameError):
    """Query point lies on a line spanned by two input points."""

    code = "degenerate_placement"


class GeneralPositionViolation(EsgameError):
    code = "general_position"


class GameAlreadyFinished(EsgameError):
    code = "game_finished"


class MalformedTrace(EsgameError):
    code = "malformed_trace"


class InvariantViolation(EsgameError):
    code = "invariant_violation"


class LayerCountMismatch(EsgameError):
    code = "layer_count_mismatch"


class NoFeasiblePoint(EsgameError):
    """A guaranteed-feasible construction found no point; signals a bug
    or a violated claim, never expected at runtime."""

    code = "no_feasible_point"


class NoWinningMove(EsgameError):
    code = "no_winning_move"


class DepthExceeded(EsgameError):
    code = "depth_exceeded"


class SamplerFailure(EsgameError):
    code = "sampler_failure"

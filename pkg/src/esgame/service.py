"""HTTP/JSON service for the interactive UI.

Per-game mutation is serialized by a lock keyed on game id; overlays
are computed on demand and cached per (game id, step).  Long-running
verification/solve jobs run in a background worker and are polled.
"""

from __future__ import annotations

import threading
import uuid
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Optional

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, Response

from .errors import (
    DegenerateInput,
    DuplicatePoint,
    EsgameError,
    GameAlreadyFinished,
    GeneralPositionViolation,
    MalformedTrace,
)
from .geometry import convex_layers, point_from_strings
from .patterns import configuration_label_or_none
from .referee import MoveOutcome, apply_move, new_game, state_to_trace
from .render import render_svg
from .storage import SessionRecord, SessionStore
from .strategy import GameVariant, choose_move, losing_cells
from .verify import (
    verify_config8_closure,
    verify_layered_lemma,
    verify_no_bad_small,
    verify_strategy_tree,
)

_BAD_REQUEST = (
    DuplicatePoint,
    GeneralPositionViolation,
    MalformedTrace,
    DegenerateInput,
)


def _state_json(record: SessionRecord) -> dict:
    state = record.state
    trace = state_to_trace(state)
    label = configuration_label_or_none(state.moves) if state.is_ongoing else None
    return {
        "id": record.game_id,
        "mode": record.mode,
        "variant": trace["variant"],
        "moves": trace["moves"],
        "status": trace["status"],
        "step": state.step,
        "label": label.value if label is not None else None,
    }


def _outcome_json(outcome: MoveOutcome) -> dict:
    status: object = "ongoing"
    if outcome.finished is not None:
        status = {
            "loser": outcome.finished.loser,
            "witness": list(outcome.finished.witness),
        }
    reply = None
    if outcome.engine_reply is not None:
        xs, ys = outcome.engine_reply.as_strings()
        reply = {"x": xs, "y": ys}
    return {
        "accepted": outcome.accepted,
        "status": status,
        "step": outcome.step,
        "label": outcome.label.value if outcome.label else None,
        "engine_reply": reply,
    }


def create_app(data_root: Optional[Path] = None) -> FastAPI:
    app = FastAPI(title="esgame")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    store = SessionStore(data_root)
    locks: dict[str, threading.Lock] = {}
    locks_guard = threading.Lock()
    overlay_cache: dict[tuple[str, int], dict] = {}
    jobs: dict[str, dict] = {}
    executor = ThreadPoolExecutor(max_workers=1)

    def lock_for(game_id: str) -> threading.Lock:
        with locks_guard:
            return locks.setdefault(game_id, threading.Lock())

    @app.exception_handler(EsgameError)
    async def _domain_error(request: Request, exc: EsgameError):
        status = 400
        if isinstance(exc, GameAlreadyFinished):
            status = 409
        return JSONResponse(
            status_code=status, content={"code": exc.code, "message": str(exc)}
        )

    def _get_or_404(game_id: str) -> Optional[SessionRecord]:
        return store.load(game_id)

    @app.post("/games", status_code=201)
    def create_game(body: dict):
        try:
            variant = GameVariant(body["variant"])
            mode = body.get("mode", "human")
        except (KeyError, ValueError) as exc:
            raise MalformedTrace(f"invalid game request: {exc}")
        if mode not in ("human", "random"):
            raise MalformedTrace(f"unknown mode {mode!r}")
        if mode == "random":
            # engine vs random adversary: played out at creation, stored
            # for review and rendering
            from random import Random

            from .verify import simulate_strategy_game

            state = simulate_strategy_game(variant, Random(int(body.get("seed", 0))))
        else:
            state = new_game(variant)
        record = store.create(state, mode)
        return {"id": record.game_id}

    @app.get("/games/{game_id}")
    def get_game(game_id: str):
        record = _get_or_404(game_id)
        if record is None:
            return JSONResponse(
                status_code=404, content={"code": "unknown_game", "message": game_id}
            )
        return _state_json(record)

    @app.post("/games/{game_id}/moves")
    def post_move(game_id: str, body: dict):
        with lock_for(game_id):
            record = _get_or_404(game_id)
            if record is None:
                return JSONResponse(
                    status_code=404,
                    content={"code": "unknown_game", "message": game_id},
                )
            try:
                p = point_from_strings(str(body["x"]), str(body["y"]))
            except (KeyError, ValueError, TypeError) as exc:
                raise MalformedTrace(f"invalid move body: {exc}")
            outcome = apply_move(record.state, p)
            reply_outcome = None
            if (
                record.mode == "human"
                and record.state.is_ongoing
                and record.state.step % 2 == 1
            ):
                engine_point = choose_move(record.state)
                reply_outcome = apply_move(record.state, engine_point)
                outcome = MoveOutcome(
                    accepted=outcome.accepted,
                    finished=reply_outcome.finished,
                    step=reply_outcome.step,
                    label=reply_outcome.label,
                    engine_reply=engine_point,
                )
            store.save(record)
            return _outcome_json(outcome)

    @app.get("/games/{game_id}/overlay")
    def get_overlay(game_id: str):
        record = _get_or_404(game_id)
        if record is None:
            return JSONResponse(
                status_code=404, content={"code": "unknown_game", "message": game_id}
            )
        state = record.state
        key = (game_id, state.step)
        cached = overlay_cache.get(key)
        if cached is not None:
            return cached
        regions: list[list[dict]] = []
        if state.step >= 4:
            cells = losing_cells(state.moves, state.variant)
            for cell in cells:
                regions.append(
                    [
                        {"x": p.as_strings()[0], "y": p.as_strings()[1]}
                        for p in cell.polygon
                    ]
                )
        layers = []
        if state.step >= 2:
            layers = [
                [{"x": p.as_strings()[0], "y": p.as_strings()[1]} for p in layer]
                for layer in convex_layers(state.moves)
            ]
        label = configuration_label_or_none(state.moves) if state.is_ongoing else None
        payload = {
            "losing_regions": regions,
            "label": label.value if label is not None else None,
            "step": state.step,
            "layers": layers,
        }
        overlay_cache[key] = payload
        return payload

    @app.get("/games/{game_id}/svg")
    def get_svg(game_id: str, overlay: bool = False):
        record = _get_or_404(game_id)
        if record is None:
            return JSONResponse(
                status_code=404, content={"code": "unknown_game", "message": game_id}
            )
        bundle = get_overlay(game_id) if overlay else None
        return Response(
            content=render_svg(record.state, bundle), media_type="image/svg+xml"
        )

    @app.delete("/games/{game_id}", status_code=204)
    def delete_game(game_id: str):
        if not store.delete(game_id):
            return JSONResponse(
                status_code=404, content={"code": "unknown_game", "message": game_id}
            )

    # background verification jobs, polled by id
    _RUNNERS = {
        "strategy": lambda seed, samples: [
            verify_strategy_tree(GameVariant.CONVEX).to_json(),
            verify_strategy_tree(GameVariant.EMPTY).to_json(),
        ],
        "small": lambda seed, samples: [
            verify_no_bad_small(n, variant, samples=samples, seed=seed).to_json()
            for n in (4, 6)
            for variant in (GameVariant.CONVEX, GameVariant.EMPTY)
        ],
        "layered": lambda seed, samples: [
            verify_layered_lemma(sig, samples=samples, seed=seed).to_json()
            for sig in ((4, 3, 2), (4, 4, 1))
        ],
        "closure": lambda seed, samples: [
            verify_config8_closure(samples=samples, seed=seed).to_json()
        ],
    }

    @app.post("/jobs/verify", status_code=202)
    def submit_verify(body: dict):
        lemma = body.get("lemma", "strategy")
        if lemma not in _RUNNERS:
            raise MalformedTrace(f"unknown lemma {lemma!r}")
        seed = int(body.get("seed", 2024))
        samples = int(body.get("samples", 200))
        job_id = uuid.uuid4().hex[:12]
        jobs[job_id] = {"status": "running", "lemma": lemma}

        def run():
            try:
                reports = _RUNNERS[lemma](seed, samples)
                jobs[job_id] = {"status": "done", "lemma": lemma, "reports": reports}
            except Exception as exc:  # noqa: BLE001 - job boundary
                jobs[job_id] = {"status": "error", "lemma": lemma, "message": str(exc)}

        executor.submit(run)
        return {"id": job_id}

    @app.get("/jobs/{job_id}")
    def get_job(job_id: str):
        job = jobs.get(job_id)
        if job is None:
            return JSONResponse(
                status_code=404, content={"code": "unknown_job", "message": job_id}
            )
        return job

    return app

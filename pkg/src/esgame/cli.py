"""Command-line interface.

Exit codes: 0 success, 1 counterexample/refutation found, 2 usage error
(argparse's default).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from random import Random

from .errors import EsgameError
from .geometry import point_from_strings
from .referee import apply_move, new_game, state_from_trace, state_to_trace
from .render import render_svg
from .strategy import GameVariant, Refutation, WinCertificate, choose_move, solve_and_or
from .verify import (
    simulate_strategy_game,
    verify_config8_closure,
    verify_layered_lemma,
    verify_no_bad_small,
    verify_strategy_tree,
)


def _variant(name: str) -> GameVariant:
    return GameVariant(name)


def cmd_play(args) -> int:
    variant = _variant(args.variant)
    state = new_game(variant)
    rng = Random(args.seed)
    if args.mode == "random":
        state = simulate_strategy_game(variant, rng)
        print(json.dumps(state_to_trace(state), indent=1))
        print(
            f"finished at step {state.step}; player {state.finished.loser} loses",
            file=sys.stderr,
        )
        return 0
    print(
        "You are Player 1. Enter moves as 'x y' (rationals like 3/2 or decimals).",
        file=sys.stderr,
    )
    while state.is_ongoing:
        line = input("your move> ").strip()
        if not line:
            continue
        if line in ("q", "quit", "exit"):
            print(json.dumps(state_to_trace(state), indent=1))
            return 0
        try:
            xs, ys = line.split()
            outcome = apply_move(state, point_from_strings(xs, ys))
        except (ValueError, EsgameError) as exc:
            print(f"rejected: {exc}", file=sys.stderr)
            continue
        if state.is_ongoing:
            reply = choose_move(state)
            outcome = apply_move(state, reply)
            rx, ry = reply.as_strings()
            label = outcome.label.value if outcome.label else "-"
            print(f"engine replies ({rx}, {ry}); configuration {label}", file=sys.stderr)
    print(json.dumps(state_to_trace(state), indent=1))
    print(f"player {state.finished.loser} loses at step {state.step}", file=sys.stderr)
    return 0


def _print_report_row(report) -> None:
    stats = report.statistics
    items = stats.get("samples") or stats.get("leaves") or stats.get("cells_tested") or 0
    secs = stats.get("runtime_s", 0.0)
    print(f"{report.lemma_id:<28} {report.verdict:<16} {items:>9} {secs:>9.2f}s")


def cmd_verify(args) -> int:
    lemma = args.lemma
    samples = args.samples
    seed = args.seed
    reports = []
    if lemma in ("all", "strategy"):
        for variant in (GameVariant.CONVEX, GameVariant.EMPTY):
            reports.append(verify_strategy_tree(variant))
    if lemma in ("all", "small"):
        n_samples = samples or 10_000
        for n in (4, 6):
            for variant in (GameVariant.CONVEX, GameVariant.EMPTY):
                reports.append(
                    verify_no_bad_small(n, variant, samples=n_samples, seed=seed)
                )
    if lemma in ("all", "layered"):
        n_samples = samples or 10_000
        for sig in ((4, 3, 2), (4, 4, 1)):
            reports.append(verify_layered_lemma(sig, samples=n_samples, seed=seed))
    if lemma in ("all", "closure"):
        n_samples = samples or 1000
        reports.append(verify_config8_closure(samples=n_samples, seed=seed))
    print(f"{'lemma':<28} {'verdict':<16} {'items':>9} {'seconds':>10}")
    for report in reports:
        _print_report_row(report)
    if args.json:
        Path(args.json).write_text(
            json.dumps([r.to_json() for r in reports], indent=1)
        )
    if all(r.verified for r in reports):
        return 0
    for report in reports:
        if not report.verified:
            print(
                f"counterexample in {report.lemma_id}: "
                f"{json.dumps(report.counterexample)}",
                file=sys.stderr,
            )
    return 1


def cmd_solve(args) -> int:
    variant = _variant(args.variant)
    k = args.k
    policy = None
    if k == 5:
        # the full k=5 OR-search is infeasible; certify the engine policy
        def policy(points, var):
            from types import SimpleNamespace

            return choose_move(
                SimpleNamespace(moves=list(points), variant=var, finished=None)
            )

    result = solve_and_or([], variant, k, max_step=2 * k - 1, policy=policy)
    if isinstance(result, WinCertificate):
        print(f"game value: ends at step {result.forced_depth}")
        if args.certificate:
            Path(args.certificate).write_text(json.dumps(result.to_json(), indent=1))
        return 0
    assert isinstance(result, Refutation)
    print("refutation: the game escapes the step bound", file=sys.stderr)
    print(json.dumps(result.to_json(), indent=1))
    return 1


def cmd_render(args) -> int:
    trace = json.loads(Path(args.trace).read_text())
    state = state_from_trace(trace)
    overlay = None
    if args.overlay and state.step >= 4 and state.is_ongoing:
        from .render import overlay_from_cells
        from .strategy import losing_cells

        overlay = overlay_from_cells(losing_cells(state.moves, state.variant))
    Path(args.out).write_text(render_svg(state, overlay))
    print(f"wrote {args.out}")
    return 0


def cmd_replay(args) -> int:
    trace = json.loads(Path(args.trace).read_text())
    state = state_from_trace(trace)
    replay = new_game(state.variant)
    for i, p in enumerate(state.moves):
        outcome = apply_move(replay, p)
        label = outcome.label.value if outcome.label else "-"
        status = "ongoing" if replay.is_ongoing else f"loser={replay.finished.loser}"
        print(f"step {i + 1}: configuration {label:<5} {status}")
    print("trace replays consistently")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="esgame",
        description="Exact engine and verifier for the 5-gon avoidance game",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_play = sub.add_parser("play", help="play a game (human or random adversary)")
    p_play.add_argument("--variant", choices=["convex", "empty"], required=True)
    p_play.add_argument("--mode", choices=["human", "random"], default="human")
    p_play.add_argument("--seed", type=int, default=0)
    p_play.set_defaults(func=cmd_play)

    p_verify = sub.add_parser("verify", help="verify lemmas and theorems")
    p_verify.add_argument(
        "--lemma",
        choices=["all", "strategy", "small", "layered", "closure"],
        default="all",
    )
    p_verify.add_argument("--seed", type=int, default=2024)
    p_verify.add_argument("--samples", type=int, default=None)
    p_verify.add_argument("--json", type=str, default=None, help="write reports to file")
    p_verify.set_defaults(func=cmd_verify)

    p_solve = sub.add_parser("solve", help="solve the k-gon game exactly")
    p_solve.add_argument("--k", type=int, choices=[3, 4, 5], required=True)
    p_solve.add_argument("--variant", choices=["convex", "empty"], required=True)
    p_solve.add_argument("--certificate", type=str, default=None)
    p_solve.set_defaults(func=cmd_solve)

    p_render = sub.add_parser("render", help="render a trace to SVG")
    p_render.add_argument("--trace", required=True)
    p_render.add_argument("--out", required=True)
    p_render.add_argument("--overlay", action="store_true")
    p_render.set_defaults(func=cmd_render)

    p_replay = sub.add_parser("replay", help="replay and validate a trace")
    p_replay.add_argument("--trace", required=True)
    p_replay.set_defaults(func=cmd_replay)

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.add_argument("--data", type=str, default=None)
    p_serve.set_defaults(func=cmd_serve)

    return parser


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(Path(args.data) if args.data else None)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except EsgameError as exc:
        print(f"error ({exc.code}): {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

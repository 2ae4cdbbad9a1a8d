"""Command-line entry points: solve, play, bench, serve."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bench as benchmod
from . import chess, connect, sudoku
from .engine import (
    GameOverError,
    GameRules,
    IllegalMoveError,
    SelectorKind,
    build_selectors,
    optimal_play,
)
from .sessions import GameStatus, SessionStore

_KINDS = {k.value: k for k in SelectorKind}


def _read_arg_or_file(value: str) -> str:
    path = Path(value)
    if path.is_file():
        return path.read_text(encoding="utf-8")
    return value


def _connect_config(args) -> connect.ConnectConfig:
    presets = {
        "connect3": connect.CONNECT_THREE,
        "connect4": connect.CONNECT_FOUR,
    }
    return presets[args.game]


def _game_setup(args):
    """Returns (game name, rules, default depth, play formatter)."""
    depth_arg = getattr(args, "depth", None)
    if args.game in ("connect3", "connect4"):
        cfg = _connect_config(args)
        depth = depth_arg or cfg.lookahead
        return args.game, connect.rules(cfg), depth, str
    if args.game == "sudoku":
        if not args.puzzle:
            raise SystemExit("sudoku requires --puzzle FILE|STRING")
        puzzle = sudoku.parse_puzzle(_read_arg_or_file(args.puzzle))
        depth = depth_arg or len(puzzle.gaps)
        return "sudoku", sudoku.rules(puzzle), depth, str
    if args.game == "chess":
        position = (
            _read_arg_or_file(args.position) if args.position else chess.MATE_IN_TWO
        )
        board = chess.parse_position(position)
        depth = depth_arg or 6
        return "chess", chess.rules(board), depth, str
    raise SystemExit(f"unknown game {args.game!r}")


def cmd_solve(args) -> int:
    name, rules, depth, fmt = _game_setup(args)
    kind = _KINDS[args.selector]
    play = optimal_play(rules, build_selectors(rules, kind, depth))
    outcome = rules.payoff(play)
    print(f"An optimal play for {name} is {fmt(play)}")
    print(f"and the optimal outcome is {outcome}")
    return 0


def cmd_play(args) -> int:
    store = SessionStore()
    if args.game == "connect3":
        config = {"width": 5, "height": 3, "run_length": 3, "lookahead": args.depth or 9}
    else:
        config = {"width": 7, "height": 6, "run_length": 4, "lookahead": args.depth or 6}
    session = store.create_session("connect", config)
    print("You are X and move first. Enter a column number, or q to quit.")
    while True:
        state = store.get_state(session.id)
        print(state["board"])
        if state["status"] != GameStatus.IN_PROGRESS.value:
            print(f"Game over: {state['status']}")
            return 0
        raw = input(f"your move {state['legal_moves']}> ").strip()
        if raw.lower() in ("q", "quit"):
            return 0
        try:
            store.submit_human_move(session.id, int(raw))
        except (ValueError, IllegalMoveError) as exc:
            print(f"illegal move: {exc}")
            continue
        if store.get_state(session.id)["status"] != GameStatus.IN_PROGRESS.value:
            continue
        try:
            move, _ = store.request_ai_move(session.id)
            print(f"AI plays column {move}")
        except GameOverError:
            pass


def _parse_depths(spec: str):
    lo, _, hi = spec.partition("..")
    return range(int(lo), int(hi or lo) + 1)


def cmd_bench(args) -> int:
    name, rules, _, _ = _game_setup(args)
    report = benchmod.run_benchmark(
        game=name,
        rules_for_depth=lambda depth: rules,
        kind=_KINDS[args.selector],
        depth_range=list(_parse_depths(args.depths)),
        repetitions=args.reps,
        timeout=args.timeout,
    )
    csv_text = benchmod.to_csv(report)
    Path(args.out).write_text(csv_text, encoding="utf-8")
    print(csv_text, end="")
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(SessionStore(snapshot_dir=args.snapshot_dir))
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="selgames")
    sub = parser.add_subparsers(dest="command", required=True)

    games = ["connect3", "connect4", "sudoku", "chess"]

    solve = sub.add_parser("solve", help="compute an optimal play and outcome")
    solve.add_argument("game", choices=games)
    solve.add_argument("--depth", type=int, default=None)
    solve.add_argument("--selector", choices=sorted(_KINDS), default="scored")
    solve.add_argument("--puzzle", help="sudoku puzzle file or inline string")
    solve.add_argument("--position", help="chess position file or inline string")
    solve.set_defaults(func=cmd_solve)

    play = sub.add_parser("play", help="interactive human-vs-AI connect game")
    play.add_argument("game", choices=["connect3", "connect4"])
    play.add_argument("--depth", type=int, default=None)
    play.set_defaults(func=cmd_play)

    bench = sub.add_parser("bench", help="depth-sweep benchmark to CSV")
    bench.add_argument("game", choices=games)
    bench.add_argument("--depths", required=True, help="A..B inclusive")
    bench.add_argument("--selector", choices=sorted(_KINDS), default="scored")
    bench.add_argument("--reps", type=int, default=1)
    bench.add_argument("--timeout", type=float, default=None)
    bench.add_argument("--out", required=True)
    bench.add_argument("--puzzle")
    bench.add_argument("--position")
    bench.set_defaults(func=cmd_bench)

    serve = sub.add_parser("serve", help="run the HTTP game service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    serve.add_argument("--snapshot-dir", default=None)
    serve.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

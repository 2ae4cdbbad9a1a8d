"""Game sessions for interactive play: event-sourced move logs over the engine.

A session is (kind, config, move log); board, legal moves, and status are
always recomputed from the log, never stored.  Sessions live in memory with
optional JSON snapshots so a restarted service can reload them.
"""

from __future__ import annotations

import json
import threading
import uuid
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

from . import chess, connect, sudoku
from .engine import (
    GameOverError,
    GameRules,
    IllegalMoveError,
    SelectorKind,
    optimal_strategy,
)


class GameStatus(Enum):
    IN_PROGRESS = "InProgress"
    FIRST_WON = "FirstWon"
    SECOND_WON = "SecondWon"
    DRAW = "Draw"


class UnknownSessionError(KeyError):
    pass


class ConfigError(ValueError):
    pass


@dataclass
class GameAdapter:
    """Per-kind plumbing: rules plus JSON move/board conversions."""

    rules: GameRules
    selector_kind: SelectorKind
    lookahead: int
    render: Callable[[List[Any]], str]
    encode_move: Callable[[Any], Any]
    decode_move: Callable[[Any], Any]


def _connect_adapter(config: Dict[str, Any]) -> GameAdapter:
    cfg = connect.ConnectConfig(
        width=int(config.get("width", 7)),
        height=int(config.get("height", 6)),
        run_length=int(config.get("run_length", 4)),
        lookahead=int(config.get("lookahead", 6)),
    )
    return GameAdapter(
        rules=connect.rules(cfg),
        selector_kind=SelectorKind.SCORED,
        lookahead=cfg.lookahead,
        render=lambda h: connect.render_board(connect.board_from_history(h, cfg)),
        encode_move=lambda m: m,
        decode_move=lambda m: int(m),
    )


def _sudoku_adapter(config: Dict[str, Any]) -> GameAdapter:
    if "puzzle" not in config:
        raise ConfigError("sudoku config requires a 'puzzle' string")
    puzzle = sudoku.parse_puzzle(config["puzzle"])
    lookahead = int(config.get("lookahead", len(puzzle.gaps)))
    return GameAdapter(
        rules=sudoku.rules(puzzle),
        selector_kind=SelectorKind.BOOLEAN,
        lookahead=lookahead,
        render=lambda h: sudoku.render_board(sudoku.board_after(h, puzzle)),
        encode_move=lambda m: list(m),
        decode_move=lambda m: (int(m[0]), int(m[1]), int(m[2])),
    )


def _chess_adapter(config: Dict[str, Any]) -> GameAdapter:
    if "position" not in config:
        raise ConfigError("chess config requires a 'position' string")
    board = chess.parse_position(config["position"])
    lookahead = int(config.get("lookahead", 6))
    max_len = int(config.get("max_game_length", 60))
    return GameAdapter(
        rules=chess.rules(board, max_len),
        selector_kind=SelectorKind.SCORED,
        lookahead=lookahead,
        render=lambda h: chess.render_position(chess.board_after(h, board)),
        encode_move=lambda m: {"from": list(m[0]), "to": list(m[1])},
        decode_move=lambda m: (
            (int(m["from"][0]), int(m["from"][1])),
            (int(m["to"][0]), int(m["to"][1])),
        ),
    )


_ADAPTERS: Dict[str, Callable[[Dict[str, Any]], GameAdapter]] = {
    "connect": _connect_adapter,
    "sudoku": _sudoku_adapter,
    "chess": _chess_adapter,
}


def make_adapter(kind: str, config: Dict[str, Any]) -> GameAdapter:
    if kind not in _ADAPTERS:
        raise ConfigError(f"unknown game kind {kind!r}")
    try:
        return _ADAPTERS[kind](config)
    except (ValueError, TypeError, KeyError) as exc:
        raise ConfigError(str(exc)) from exc


@dataclass
class Session:
    id: str
    kind: str
    config: Dict[str, Any]
    moves: List[Any] = field(default_factory=list)
    adapter: GameAdapter = None
    lock: threading.Lock = field(default_factory=threading.Lock)

    def status(self) -> GameStatus:
        rules = self.adapter.rules
        outcome = rules.payoff(self.moves)
        if self.kind == "sudoku":
            if outcome and len(self.moves) == rules.max_game_length:
                return GameStatus.FIRST_WON
            if not outcome:
                return GameStatus.DRAW
            return GameStatus.IN_PROGRESS
        value = outcome[0]
        if value > 0:
            return GameStatus.FIRST_WON
        if value < 0:
            return GameStatus.SECOND_WON
        if not rules.possible_moves(self.moves):
            return GameStatus.DRAW
        return GameStatus.IN_PROGRESS

    def legal_moves(self) -> List[Any]:
        if self.status() is not GameStatus.IN_PROGRESS:
            return []
        return self.adapter.rules.possible_moves(self.moves)

    def to_move(self) -> str:
        return "first" if len(self.moves) % 2 == 0 else "second"

    def view(self) -> Dict[str, Any]:
        return {
            "id": self.id,
            "kind": self.kind,
            "status": self.status().value,
            "board": self.adapter.render(self.moves),
            "legal_moves": [self.adapter.encode_move(m) for m in self.legal_moves()],
            "to_move": self.to_move(),
            "move_count": len(self.moves),
        }


class SessionStore:
    """In-memory sessions keyed by id, with optional JSON snapshots."""

    def __init__(self, snapshot_dir: Optional[str] = None):
        self._sessions: Dict[str, Session] = {}
        self._lock = threading.Lock()
        self._snapshot_dir = Path(snapshot_dir) if snapshot_dir else None
        if self._snapshot_dir:
            self._snapshot_dir.mkdir(parents=True, exist_ok=True)
            self._load_snapshots()

    def create_session(self, kind: str, config: Dict[str, Any]) -> Session:
        adapter = make_adapter(kind, config)
        session = Session(
            id=uuid.uuid4().hex, kind=kind, config=dict(config), adapter=adapter
        )
        with self._lock:
            self._sessions[session.id] = session
        self._snapshot(session)
        return session

    def get(self, session_id: str) -> Session:
        with self._lock:
            session = self._sessions.get(session_id)
        if session is None:
            raise UnknownSessionError(session_id)
        return session

    def submit_human_move(self, session_id: str, wire_move: Any) -> Session:
        session = self.get(session_id)
        with session.lock:
            if session.status() is not GameStatus.IN_PROGRESS:
                raise GameOverError("the game is already finished")
            try:
                move = session.adapter.decode_move(wire_move)
            except (TypeError, ValueError, KeyError, IndexError) as exc:
                raise IllegalMoveError(f"malformed move: {wire_move!r}") from exc
            if move not in session.adapter.rules.possible_moves(session.moves):
                raise IllegalMoveError(f"illegal move: {wire_move!r}")
            session.moves.append(move)
            self._snapshot(session)
        return session

    def request_ai_move(self, session_id: str, lookahead: Optional[int] = None):
        session = self.get(session_id)
        with session.lock:
            if session.status() is not GameStatus.IN_PROGRESS:
                raise GameOverError("the game is already finished")
            adapter = session.adapter
            depth = lookahead if lookahead is not None else adapter.lookahead
            move = optimal_strategy(
                adapter.rules, adapter.selector_kind, depth, session.moves
            )
            session.moves.append(move)
            self._snapshot(session)
        return move, session

    def get_state(self, session_id: str) -> Dict[str, Any]:
        session = self.get(session_id)
        with session.lock:
            return session.view()

    def _snapshot(self, session: Session) -> None:
        if not self._snapshot_dir:
            return
        path = self._snapshot_dir / f"{session.id}.json"
        payload = {
            "id": session.id,
            "kind": session.kind,
            "config": session.config,
            "moves": [session.adapter.encode_move(m) for m in session.moves],
        }
        path.write_text(json.dumps(payload), encoding="utf-8")

    def _load_snapshots(self) -> None:
        for path in sorted(self._snapshot_dir.glob("*.json")):
            payload = json.loads(path.read_text(encoding="utf-8"))
            adapter = make_adapter(payload["kind"], payload["config"])
            session = Session(
                id=payload["id"],
                kind=payload["kind"],
                config=payload["config"],
                moves=[adapter.decode_move(m) for m in payload["moves"]],
                adapter=adapter,
            )
            self._sessions[session.id] = session

"""HTTP/JSON game-session service.

Endpoints:
    POST /games                 create a session
    GET  /games/{id}            state view
    POST /games/{id}/moves      submit a human move
    POST /games/{id}/ai-move    ask the engine for its reply

AI search runs on a worker thread; if it exceeds the configured timeout the
request returns 202 with a "computing" status and a later ai-move request
for the same session picks up the finished result.
"""

from __future__ import annotations

import threading
from concurrent.futures import Future, ThreadPoolExecutor
from concurrent.futures import TimeoutError as FutureTimeoutError
from typing import Any, Dict, Optional

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from .engine import GameOverError, IllegalMoveError
from .sessions import ConfigError, SessionStore, UnknownSessionError


class CreateGameRequest(BaseModel):
    kind: str
    config: Dict[str, Any] = {}


class MoveRequest(BaseModel):
    move: Any


class AiMoveRequest(BaseModel):
    lookahead: Optional[int] = None


def create_app(
    store: Optional[SessionStore] = None, ai_timeout: float = 120.0
) -> FastAPI:
    app = FastAPI(title="selgames")
    # The browser client may be served from a different origin.
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    app.state.store = store or SessionStore()
    app.state.ai_timeout = ai_timeout
    executor = ThreadPoolExecutor(max_workers=4)
    pending: Dict[str, Future] = {}
    pending_lock = threading.Lock()

    def error(status_code: int, message: str) -> JSONResponse:
        return JSONResponse(status_code=status_code, content={"error": message})

    @app.post("/games", status_code=201)
    def create_game(request: CreateGameRequest):
        try:
            session = app.state.store.create_session(request.kind, request.config)
        except ConfigError as exc:
            return error(400, str(exc))
        return {"id": session.id, "state": session.view()}

    @app.get("/games/{session_id}")
    def get_game(session_id: str):
        try:
            return app.state.store.get_state(session_id)
        except UnknownSessionError:
            return error(404, "unknown session")

    @app.post("/games/{session_id}/moves")
    def submit_move(session_id: str, request: MoveRequest):
        try:
            session = app.state.store.submit_human_move(session_id, request.move)
        except UnknownSessionError:
            return error(404, "unknown session")
        except (IllegalMoveError, GameOverError) as exc:
            return error(409, str(exc))
        return session.view()

    @app.post("/games/{session_id}/ai-move")
    def ai_move(session_id: str, request: AiMoveRequest):
        try:
            app.state.store.get(session_id)
        except UnknownSessionError:
            return error(404, "unknown session")
        with pending_lock:
            future = pending.get(session_id)
            if future is None:
                future = executor.submit(
                    app.state.store.request_ai_move, session_id, request.lookahead
                )
                pending[session_id] = future
        try:
            move, session = future.result(timeout=app.state.ai_timeout)
        except FutureTimeoutError:
            return JSONResponse(status_code=202, content={"status": "computing"})
        except GameOverError as exc:
            with pending_lock:
                pending.pop(session_id, None)
            return error(409, str(exc))
        with pending_lock:
            pending.pop(session_id, None)
        return {"move": session.adapter.encode_move(move), "state": session.view()}

    return app

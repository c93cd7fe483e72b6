"""HTTP session service for the interactive puzzle.

All game state lives server side; clients only render what the service
returns.  Sessions are in-memory and each one is mutated under its own
lock, so concurrent clients may play different sessions freely.
"""

from __future__ import annotations

import threading
from pathlib import Path

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel, Field

from .analysis import plane_for
from .session import PuzzleSession, apply_move, create_session, preview_move, undo_move


class CreateSessionRequest(BaseModel):
    q: int
    alpha: int = 0
    scramble_length: int = Field(default=0, ge=0)
    seed: int | None = None


class MoveRequest(BaseModel):
    target: int


def create_app(ui_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="planepuzzle")
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"],
    )
    sessions: dict[str, PuzzleSession] = {}
    locks: dict[str, threading.Lock] = {}
    registry_lock = threading.Lock()

    def session_and_lock(sid: str) -> tuple[PuzzleSession, threading.Lock]:
        with registry_lock:
            session = sessions.get(sid)
            if session is None:
                raise HTTPException(status_code=404, detail="unknown session id")
            return session, locks[sid]

    @app.get("/api/plane/{q}")
    def get_plane(q: int) -> dict:
        try:
            pl = plane_for(q)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        return {
            "q": q,
            "points": [list(c) for c in pl.point_coords],
            "lines": [
                {"covector": list(line.covector), "point_ids": list(line.point_ids)}
                for line in pl.lines
            ],
        }

    @app.post("/api/sessions")
    def post_session(req: CreateSessionRequest) -> dict:
        try:
            pl = plane_for(req.q)
            session = create_session(
                pl, alpha=req.alpha, scramble_length=req.scramble_length, seed=req.seed,
            )
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        with registry_lock:
            sessions[session.id] = session
            locks[session.id] = threading.Lock()
        return session.state_dict()

    @app.get("/api/sessions/{sid}")
    def get_session(sid: str) -> dict:
        session, _ = session_and_lock(sid)
        return session.state_dict()

    @app.post("/api/sessions/{sid}/moves")
    def post_move(sid: str, req: MoveRequest) -> dict:
        session, lock = session_and_lock(sid)
        with lock:
            try:
                applied = apply_move(session, req.target)
            except ValueError as exc:
                raise HTTPException(status_code=400, detail=str(exc))
            return {"session": session.state_dict(), "applied": applied.as_dict()}

    @app.get("/api/sessions/{sid}/preview")
    def get_preview(sid: str, target: int) -> dict:
        session, lock = session_and_lock(sid)
        with lock:
            try:
                return preview_move(session, target).as_dict()
            except ValueError as exc:
                raise HTTPException(status_code=400, detail=str(exc))

    @app.post("/api/sessions/{sid}/undo")
    def post_undo(sid: str) -> dict:
        session, lock = session_and_lock(sid)
        with lock:
            try:
                undo_move(session)
            except ValueError as exc:
                raise HTTPException(status_code=400, detail=str(exc))
            return session.state_dict()

    if ui_dir and Path(ui_dir).is_dir():
        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")
    return app

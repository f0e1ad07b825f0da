"""HTTP endpoints: create sessions, relay moves, serve views and transcripts.

Request bodies are validated models; responses are plain JSON.  Rule
violations answer 400 with the referee's message and never mutate state;
unknown sessions answer 404; a session already processing a request answers
409.  Views are derived entirely from the game state, so replaying the
transcript reproduces them.
"""

from __future__ import annotations

from contextlib import contextmanager
from typing import Iterator, Optional

from fastapi import FastAPI, HTTPException, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from .. import __version__
from ..game import (
    STATUS_FORFEIT,
    STATUS_ONGOING,
    Forfeit,
    GameConfig,
    GameState,
    new_game,
)
from .store import (
    MAX_SESSION_ROUNDS,
    MODE_AUTO,
    MODE_HUMAN_ALICE,
    MODE_HUMAN_BOB,
    MODES,
    Session,
    SessionStore,
    pick_engine_alice,
    pick_engine_bob,
)


class CreateSessionRequest(BaseModel):
    mode: str
    q: int
    rounds: int


class BobMoveRequest(BaseModel):
    slot: int


class AliceMoveRequest(BaseModel):
    color: int


def view_of(session: Session) -> dict:
    state = session.state
    n = len(state.points)
    bob_to_move = (
        state.status == STATUS_ONGOING
        and state.pending is None
        and state.round < state.config.max_rounds
    )
    view: dict = {
        "id": session.id,
        "mode": session.mode,
        "q": state.config.q,
        "max_rounds": state.config.max_rounds,
        "round": state.round,
        "status": state.status,
        "points": [
            {"num": p.num, "depth": p.depth, "value": float(p), "color": c}
            for p, c in state.points
        ],
        "legal_slots": list(range(n + 1)) if bob_to_move else [],
        "pending": None,
        "witness": None,
        "engines": {"alice": session.alice_label, "bob": session.bob_label},
        "transcript": state.to_transcript().to_dict(),
    }
    if state.pending is not None:
        view["pending"] = {
            "num": state.pending.num,
            "depth": state.pending.depth,
            "value": float(state.pending),
            "slot": state.pending_slot,
        }
    if state.witness is not None:
        view["witness"] = {"start": state.witness.start, "size": state.witness.size}
    return view


def _engine_alice_answers(session: Session) -> None:
    """Color the pending position with the session's engine Alice."""
    assert session.engine_alice is not None
    state = session.state
    try:
        color = session.engine_alice(state)
        state.apply_alice(color)
    except Exception as exc:  # noqa: BLE001 - engine failure forfeits, not 500s
        state.forfeit = Forfeit(actor="alice", reason=str(exc))
        state.status = STATUS_FORFEIT


def _engine_bob_premoves(session: Session) -> None:
    """Stage engine Bob's next slot if the game still has rounds to play."""
    assert session.engine_bob is not None
    state = session.state
    if state.status != STATUS_ONGOING or state.round >= state.config.max_rounds:
        return
    try:
        slot = session.engine_bob(state)
        state.apply_bob(slot)
    except Exception as exc:  # noqa: BLE001
        state.forfeit = Forfeit(actor="bob", reason=str(exc))
        state.status = STATUS_FORFEIT


def _run_auto(session: Session) -> None:
    """Play the whole engine-versus-engine match inside the session state."""
    state = session.state
    while state.status == STATUS_ONGOING and state.round < state.config.max_rounds:
        _engine_bob_premoves(session)
        if state.pending is None:
            break
        _engine_alice_answers(session)


def create_app(store: Optional[SessionStore] = None) -> FastAPI:
    app = FastAPI(title="thuegame service", version=__version__)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    sessions = store if store is not None else SessionStore()
    app.state.store = sessions

    @app.exception_handler(RequestValidationError)
    async def _validation_as_400(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"detail": str(exc.errors())})

    def require(session_id: str) -> Session:
        session = sessions.get(session_id)
        if session is None:
            raise HTTPException(status_code=404, detail="unknown session")
        return session

    @contextmanager
    def exclusive(session: Session) -> Iterator[None]:
        if not session.lock.acquire(blocking=False):
            raise HTTPException(status_code=409, detail="session busy")
        try:
            yield
        finally:
            session.lock.release()

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok", "version": __version__}

    @app.post("/sessions")
    def create_session(body: CreateSessionRequest) -> dict:
        if body.mode not in MODES:
            raise HTTPException(
                status_code=400,
                detail=f"mode must be one of {', '.join(MODES)}",
            )
        if body.rounds > MAX_SESSION_ROUNDS:
            raise HTTPException(
                status_code=400,
                detail=f"rounds capped at {MAX_SESSION_ROUNDS} per session",
            )
        try:
            config = GameConfig(q=body.q, max_rounds=body.rounds)
            session = Session(
                id=sessions.new_id(), mode=body.mode, state=new_game(config)
            )
            if body.mode in (MODE_HUMAN_BOB, MODE_AUTO):
                session.alice_label, session.engine_alice = pick_engine_alice(
                    body.q, body.rounds
                )
            if body.mode in (MODE_HUMAN_ALICE, MODE_AUTO):
                session.bob_label, session.engine_bob = pick_engine_bob(body.q)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from None
        if body.mode == MODE_HUMAN_ALICE:
            _engine_bob_premoves(session)
        elif body.mode == MODE_AUTO:
            _run_auto(session)
        sessions.put(session)
        return {"id": session.id, "view": view_of(session)}

    @app.get("/sessions/{session_id}")
    def get_view(session_id: str) -> dict:
        session = require(session_id)
        with exclusive(session):
            return view_of(session)

    @app.post("/sessions/{session_id}/bob-move")
    def bob_move(session_id: str, body: BobMoveRequest) -> dict:
        session = require(session_id)
        with exclusive(session):
            if session.mode != MODE_HUMAN_BOB:
                raise HTTPException(
                    status_code=400, detail="session has no human Bob"
                )
            try:
                session.state.apply_bob(body.slot)
            except ValueError as exc:
                raise HTTPException(status_code=400, detail=str(exc)) from None
            _engine_alice_answers(session)
            return view_of(session)

    @app.post("/sessions/{session_id}/alice-move")
    def alice_move(session_id: str, body: AliceMoveRequest) -> dict:
        session = require(session_id)
        with exclusive(session):
            if session.mode != MODE_HUMAN_ALICE:
                raise HTTPException(
                    status_code=400, detail="session has no human Alice"
                )
            try:
                session.state.apply_alice(body.color)
            except ValueError as exc:
                raise HTTPException(status_code=400, detail=str(exc)) from None
            _engine_bob_premoves(session)
            return view_of(session)

    @app.get("/sessions/{session_id}/transcript")
    def transcript(session_id: str) -> dict:
        session = require(session_id)
        with exclusive(session):
            return session.state.to_transcript().to_dict()

    return app

"""HTTP and WebSocket surface for local human-vs-agent play.

Thin wiring over SessionManager: JSON in, JSON out, one socket per
spectated match delivering a snapshot event followed by the live feed.
"""

from __future__ import annotations

import queue as queue_mod
from typing import Optional

from fastapi import FastAPI, WebSocket, WebSocketDisconnect
from fastapi.concurrency import run_in_threadpool
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from ..arena.records import RecordStore
from .catalog import GameCatalog
from .sessions import SessionError, SessionManager, session_view


class CreateSessionRequest(BaseModel):
    game_id: str
    agent: str = "random"
    human_seat: int = 1
    handle: str = "anonymous"
    seed: Optional[int] = None


class MoveRequest(BaseModel):
    cell: str = Field(min_length=1)


def create_app(games_dir: str, store_path: Optional[str] = None,
               agent_move_ms: int = 5_000) -> FastAPI:
    catalog = GameCatalog.from_dir(games_dir)
    store = RecordStore(store_path) if store_path else None
    manager = SessionManager(catalog, store=store, agent_move_ms=agent_move_ms)

    app = FastAPI(title="ludokit service")
    app.state.manager = manager
    # the browser client is plain static files, usually served from another
    # local port, so cross-origin calls must be allowed
    app.add_middleware(CORSMiddleware, allow_origins=["*"],
                       allow_methods=["*"], allow_headers=["*"])

    @app.exception_handler(SessionError)
    async def _session_error(_request, exc: SessionError):
        return JSONResponse(status_code=exc.code, content={"detail": exc.message})

    @app.get("/games")
    async def games():
        return {"games": catalog.describe()}

    @app.post("/sessions")
    async def create_session(request: CreateSessionRequest):
        session = await run_in_threadpool(
            manager.create_session, request.game_id, request.agent,
            request.human_seat, request.handle, request.seed)
        return session_view(session)

    @app.get("/sessions/{session_id}")
    async def get_session(session_id: str):
        return session_view(manager.get(session_id))

    @app.post("/sessions/{session_id}/moves")
    async def submit_move(session_id: str, request: MoveRequest):
        session = await run_in_threadpool(
            manager.submit_move, session_id, request.cell)
        return session_view(session)

    @app.post("/sessions/{session_id}/resign")
    async def resign(session_id: str):
        session = await run_in_threadpool(manager.resign, session_id)
        return session_view(session)

    @app.get("/leaderboard")
    async def leaderboard(exclude_humans: bool = False):
        board = await run_in_threadpool(manager.leaderboard, exclude_humans)
        rows = []
        for row in board.rows:
            rows.append({
                "competitor": row.competitor,
                "played": row.overall.played,
                "wins": row.overall.wins,
                "draws": row.overall.draws,
                "losses": row.overall.losses,
                "win_pct": row.win_pct,
                "rating": row.rating.rating,
                "rd": row.rating.rd,
                "per_game": {g: {"played": t.played, "wins": t.wins,
                                 "draws": t.draws, "losses": t.losses,
                                 "win_pct": t.win_pct}
                             for g, t in sorted(row.per_game.items())},
                "per_category": {c: {"played": t.played, "wins": t.wins,
                                     "draws": t.draws, "losses": t.losses,
                                     "win_pct": t.win_pct}
                                 for c, t in sorted(row.per_category.items())},
            })
        return {"rows": rows, "quarantined": len(board.quarantined)}

    @app.websocket("/live/{match_id}")
    async def live(websocket: WebSocket, match_id: str):
        await websocket.accept()
        try:
            snapshot, subscriber = manager.subscribe(match_id)
        except SessionError as e:
            await websocket.send_json({"error": e.message, "code": e.code})
            await websocket.close(code=1008)
            return
        try:
            await websocket.send_text(snapshot.to_json())
            while True:
                try:
                    event = await run_in_threadpool(subscriber.get, True, 0.5)
                except queue_mod.Empty:
                    continue
                await websocket.send_text(event.to_json())
        except (WebSocketDisconnect, RuntimeError):
            pass
        finally:
            manager.unsubscribe(match_id, subscriber)

    return app

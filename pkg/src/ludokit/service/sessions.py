"""Human-vs-agent play sessions and per-match live event feeds.

Each session holds one human seat and (in two-player games) one agent
seat. Mutations are serialized behind a per-session lock, so racing
move submissions resolve to one acceptance and clean rejections. A
terminal session appends exactly one MatchRecord to the store, which
is how human handles reach the leaderboard.
"""

from __future__ import annotations

import json
import queue
import random
import threading
import time
import uuid
from dataclasses import dataclass, field
from typing import Optional

from ..agents import Agent, AgentConfigError, Budget, FORWARD_MODEL, make_observation
from ..agents.factory import AgentConfig, parse_agent
from ..arena.clock import WallClock
from ..arena.leaderboard import update_leaderboard
from ..arena.records import NATURAL, RESIGNATION, FORFEIT, MatchRecord, RecordStore
from ..engine import GameSpec, Move, apply_move, initial_state, legal_moves, status
from ..engine.board import parse_label
from ..engine.state import LOSS, WIN
from .catalog import GameCatalog


class SessionError(Exception):
    """Rejected request; `code` maps onto the HTTP status."""

    def __init__(self, message: str, code: int = 400):
        super().__init__(message)
        self.message = message
        self.code = code


@dataclass(frozen=True)
class LiveFeedEvent:
    match_id: str
    kind: str  # snapshot | move | clock | result
    payload: dict
    seq: int

    def to_json(self) -> str:
        return json.dumps(
            {"match_id": self.match_id, "kind": self.kind,
             "payload": self.payload, "seq": self.seq},
            sort_keys=True, separators=(",", ":"))


class Feed:
    """Ordered event log for one match with live subscribers."""

    def __init__(self, match_id: str):
        self.match_id = match_id
        self._events: list[LiveFeedEvent] = []
        self._subscribers: list[queue.Queue] = []
        self._lock = threading.Lock()

    def emit(self, kind: str, payload: dict) -> LiveFeedEvent:
        with self._lock:
            event = LiveFeedEvent(self.match_id, kind, payload,
                                  seq=len(self._events) + 1)
            self._events.append(event)
            for subscriber in self._subscribers:
                subscriber.put(event)
        return event

    def subscribe(self, snapshot_payload: dict) -> tuple[LiveFeedEvent, queue.Queue]:
        """A snapshot of the present plus a queue of everything after it."""
        with self._lock:
            snapshot = LiveFeedEvent(self.match_id, "snapshot",
                                     snapshot_payload, seq=len(self._events))
            subscriber: queue.Queue = queue.Queue()
            self._subscribers.append(subscriber)
            return snapshot, subscriber

    def unsubscribe(self, subscriber: queue.Queue) -> None:
        with self._lock:
            if subscriber in self._subscribers:
                self._subscribers.remove(subscriber)

    def events(self) -> list[LiveFeedEvent]:
        with self._lock:
            return list(self._events)


@dataclass
class Session:
    id: str
    game_id: str
    spec: GameSpec
    human_seat: int
    handle: str
    agent_config: Optional[AgentConfig]
    agent: Optional[Agent]
    regime: str
    seed: int
    state: object
    started: int
    moves: list[str] = field(default_factory=list)
    resigned: bool = False
    termination: Optional[str] = None
    record: Optional[MatchRecord] = None
    lock: threading.Lock = field(default_factory=threading.Lock)
    feed: Feed = None

    @property
    def agent_seat(self) -> Optional[int]:
        if self.spec.players == 1:
            return None
        return 2 if self.human_seat == 1 else 1

    @property
    def over(self) -> bool:
        return self.record is not None


def session_view(session: Session) -> dict:
    spec = session.spec
    st = status(spec, session.state)
    terminal = session.over or st.terminal
    if session.record is not None:
        outcomes = list(session.record.result)
        rule_index = session.record.rule_index
    elif st.terminal:
        outcomes = list(st.outcomes)
        rule_index = st.rule_index
    else:
        outcomes, rule_index = None, -1
    legal = [] if terminal else [m.label(spec) for m in legal_moves(spec, session.state)]
    return {
        "session_id": session.id,
        "game_id": session.game_id,
        "name": spec.name,
        "family": spec.board.family,
        "side": spec.board.side,
        "cells": spec.board.cell_count,
        "players": spec.players,
        "human_seat": session.human_seat,
        "handle": session.handle,
        "agent": session.agent_config.spec_string if session.agent_config else None,
        "occupancy": list(session.state.occupancy),
        "mover": session.state.mover,
        "moves": list(session.moves),
        "last_move": session.moves[-1] if session.moves else None,
        "legal": legal,
        "terminal": terminal,
        "outcomes": outcomes,
        "rule_index": rule_index,
        "resigned": session.resigned,
        "termination": session.termination,
    }


class SessionManager:
    """Creates sessions, applies moves, closes records, feeds spectators."""

    def __init__(self, catalog: GameCatalog, store: Optional[RecordStore] = None,
                 agent_move_ms: int = 5_000, regime: str = FORWARD_MODEL,
                 clock=None):
        self.catalog = catalog
        self.store = store
        self.agent_move_ms = agent_move_ms
        self.regime = regime
        self.clock = clock or WallClock()
        self._sessions: dict[str, Session] = {}
        self._lock = threading.Lock()

    # -- lifecycle ------------------------------------------------------

    def create_session(self, game_id: str, agent: str = "random",
                       human_seat: int = 1, handle: str = "anonymous",
                       seed: Optional[int] = None) -> Session:
        spec = self.catalog.spec(game_id)
        if spec is None:
            raise SessionError(f"unknown game {game_id!r}", code=404)
        if not 1 <= human_seat <= spec.players:
            raise SessionError(
                f"human seat must be between 1 and {spec.players}")
        if not handle or handle.strip() != handle:
            raise SessionError("handle must be non-empty without outer spaces")
        try:
            config = parse_agent(agent)
        except AgentConfigError as e:
            raise SessionError(str(e)) from None

        session_id = uuid.uuid4().hex[:12]
        if seed is None:
            seed = int.from_bytes(session_id.encode()[:4], "big")
        built: Optional[Agent] = None
        if spec.players > 1:
            built = config.build()
            built.check_regime(self.regime)
            built.rng = random.Random(seed)

        session = Session(
            id=session_id, game_id=game_id, spec=spec, human_seat=human_seat,
            handle=handle, agent_config=config, agent=built,
            regime=self.regime, seed=seed, state=initial_state(spec),
            started=self.clock.now(), feed=Feed(session_id))
        with self._lock:
            self._sessions[session_id] = session
        with session.lock:
            if session.agent_seat is not None and session.state.mover == session.agent_seat:
                self._agent_reply(session)
        return session

    def get(self, session_id: str) -> Session:
        with self._lock:
            session = self._sessions.get(session_id)
        if session is None:
            raise SessionError(f"unknown session {session_id!r}", code=404)
        return session

    def sessions(self) -> list[Session]:
        with self._lock:
            return list(self._sessions.values())

    # -- play -----------------------------------------------------------

    def submit_move(self, session_id: str, label: str) -> Session:
        session = self.get(session_id)
        with session.lock:
            spec = session.spec
            if session.over:
                raise SessionError("session is over", code=409)
            if session.state.mover != session.human_seat:
                raise SessionError("not your turn", code=409)
            try:
                cell = parse_label(label, spec.board.side)
            except ValueError as e:
                raise SessionError(str(e)) from None
            if session.state.occupancy[cell] != 0:
                raise SessionError(f"cell {label} is occupied")

            self._play(session, Move(cell), session.human_seat)
            if self._maybe_finish(session):
                return session
            if session.agent_seat is not None:
                self._agent_reply(session)
        return session

    def resign(self, session_id: str) -> Session:
        session = self.get(session_id)
        with session.lock:
            if session.over:
                raise SessionError("session is over", code=409)
            session.resigned = True
            result = tuple(
                LOSS if seat == session.human_seat else WIN
                for seat in range(1, session.spec.players + 1))
            self._finish(session, RESIGNATION, result, -1,
                         f"{session.handle} resigned")
        return session

    # -- internals ------------------------------------------------------

    def _play(self, session: Session, move: Move, seat: int) -> None:
        session.state = apply_move(session.spec, session.state, move)
        label = move.label(session.spec)
        session.moves.append(label)
        session.feed.emit("move", {
            "seat": seat, "label": label, "cell": move.cell,
            "move_number": len(session.moves)})

    def _agent_reply(self, session: Session) -> None:
        spec = session.spec
        st = status(spec, session.state)
        if st.terminal:
            return
        obs = make_observation(spec, session.state, session.regime,
                               session.agent_seat)
        began = time.monotonic()
        try:
            move = session.agent.select_move(obs, Budget(move_ms=self.agent_move_ms))
        except Exception as e:
            result = tuple(
                WIN if seat == session.human_seat else LOSS
                for seat in range(1, spec.players + 1))
            self._finish(session, FORFEIT, result, -1, f"agent crashed: {e}")
            return
        spent_ms = int((time.monotonic() - began) * 1000)
        self._play(session, move, session.agent_seat)
        session.feed.emit("clock", {"seat": session.agent_seat,
                                    "spent_ms": spent_ms})
        self._maybe_finish(session)

    def _maybe_finish(self, session: Session) -> bool:
        st = status(session.spec, session.state)
        if not st.terminal:
            return False
        self._finish(session, NATURAL, st.outcomes, st.rule_index)
        return True

    def _finish(self, session: Session, termination: str,
                result: tuple[str, ...], rule_index: int, reason: str = "") -> None:
        ids = []
        for seat in range(1, session.spec.players + 1):
            if seat == session.human_seat:
                ids.append(f"human:{session.handle}")
            else:
                config = session.agent_config
                ids.append(config.name or config.spec_string)
        record = MatchRecord(
            match_id=session.id, game_id=session.game_id, agents=tuple(ids),
            regime=session.regime, moves=tuple(session.moves), result=tuple(result),
            rule_index=rule_index, seed=session.seed, violations=(0,) * session.spec.players,
            started=session.started, ended=self.clock.now(),
            termination=termination, reason=reason)
        session.termination = termination
        session.record = record
        if self.store is not None:
            self.store.append(record)
        session.feed.emit("result", {
            "outcomes": list(result), "rule_index": rule_index,
            "termination": termination, "reason": reason})

    # -- spectating and standings --------------------------------------

    def subscribe(self, match_id: str) -> tuple[LiveFeedEvent, queue.Queue]:
        session = self.get(match_id)
        return session.feed.subscribe(session_view(session))

    def unsubscribe(self, match_id: str, subscriber: queue.Queue) -> None:
        try:
            session = self.get(match_id)
        except SessionError:
            return
        session.feed.unsubscribe(subscriber)

    def leaderboard(self, exclude_humans: bool = False):
        records = self.store.read_all() if self.store is not None else []
        return update_leaderboard(records, games=self.catalog.games(),
                                  exclude_humans=exclude_humans)

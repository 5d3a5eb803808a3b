"""Match records, the JSONL store, and the replay audit.

One record per line, JSON with sorted keys and compact separators, so a
seeded tournament writes a byte-identical file on every run. The store
file is the durable source of truth; the audit replays every record
through the engine and rejects any whose move list does not reproduce
the recorded result.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional

from ..engine import GameSpec, Move, apply_move, initial_state, status
from ..engine.state import DRAW, LOSS, WIN

NATURAL = "natural"
FORFEIT = "forfeit"
RESIGNATION = "resignation"
CAPPED = "cap"
TERMINATIONS = (NATURAL, FORFEIT, RESIGNATION, CAPPED)


@dataclass(frozen=True)
class MatchRecord:
    match_id: str
    game_id: str
    agents: tuple[str, ...]  # competitor ids by seat
    regime: str
    moves: tuple[str, ...]  # cell labels in play order
    result: tuple[str, ...]  # outcome per seat
    rule_index: int
    seed: int
    violations: tuple[int, ...]
    started: int
    ended: int
    termination: str = NATURAL
    reason: str = ""
    round: Optional[int] = None
    versions: Optional[tuple[str, ...]] = None

    def to_json(self) -> str:
        d = {
            "match_id": self.match_id,
            "game_id": self.game_id,
            "agents": list(self.agents),
            "regime": self.regime,
            "moves": list(self.moves),
            "result": list(self.result),
            "rule_index": self.rule_index,
            "seed": self.seed,
            "violations": list(self.violations),
            "started": self.started,
            "ended": self.ended,
            "termination": self.termination,
            "reason": self.reason,
        }
        if self.round is not None:
            d["round"] = self.round
        if self.versions is not None:
            d["versions"] = list(self.versions)
        return json.dumps(d, sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json(cls, line: str) -> "MatchRecord":
        d = json.loads(line)
        return cls(
            match_id=d["match_id"],
            game_id=d["game_id"],
            agents=tuple(d["agents"]),
            regime=d["regime"],
            moves=tuple(d["moves"]),
            result=tuple(d["result"]),
            rule_index=d["rule_index"],
            seed=d["seed"],
            violations=tuple(d["violations"]),
            started=d["started"],
            ended=d["ended"],
            termination=d.get("termination", NATURAL),
            reason=d.get("reason", ""),
            round=d.get("round"),
            versions=tuple(d["versions"]) if d.get("versions") is not None else None,
        )


class RecordStore:
    """Append-only newline-delimited store; one writer per file."""

    def __init__(self, path: str):
        self.path = path

    def append(self, record: MatchRecord) -> None:
        with open(self.path, "a", encoding="utf-8") as f:
            f.write(record.to_json() + "\n")

    def read_all(self) -> list[MatchRecord]:
        if not os.path.exists(self.path):
            return []
        records = []
        with open(self.path, encoding="utf-8") as f:
            for line in f:
                line = line.strip()
                if line:
                    records.append(MatchRecord.from_json(line))
        return records

    def __iter__(self):
        return iter(self.read_all())


@dataclass
class AuditReport:
    ok: list = field(default_factory=list)
    failures: list = field(default_factory=list)  # (record, reason) pairs

    @property
    def clean(self) -> bool:
        return not self.failures


def replay_record(record: MatchRecord, spec: GameSpec) -> Optional[str]:
    """Replay one record; returns None if consistent, else the defect."""
    state = initial_state(spec)
    for i, label in enumerate(record.moves):
        st = status(spec, state)
        if st.terminal:
            return f"move {i + 1} ({label}) played after the game ended"
        try:
            cell = spec.board.cell(label)
            state = apply_move(spec, state, Move(cell))
        except ValueError as e:
            return f"move {i + 1}: {e}"
        except Exception as e:
            return f"move {i + 1} ({label}): {e}"
    final = status(spec, state)
    if record.termination == NATURAL:
        if final.ongoing:
            return "recorded as finished but replay is still ongoing"
        if tuple(final.outcomes) != tuple(record.result):
            return (f"replayed result {final.outcomes} does not match "
                    f"recorded {record.result}")
        if final.rule_index != record.rule_index:
            return (f"replayed end rule {final.rule_index} does not match "
                    f"recorded {record.rule_index}")
        return None
    if record.termination in (FORFEIT, RESIGNATION):
        if final.terminal:
            return f"{record.termination} recorded but replay already ended"
        if not _valid_decisive(record.result, spec.players):
            return f"{record.termination} result {record.result} is not a loss assignment"
        return None
    if record.termination == CAPPED:
        if final.terminal:
            return "cap recorded but replay ended naturally"
        if any(r != DRAW for r in record.result):
            return f"capped result {record.result} is not all-Draw"
        return None
    return f"unknown termination {record.termination!r}"


def _valid_decisive(result: tuple[str, ...], players: int) -> bool:
    if players == 1:
        return result in ((WIN,), (LOSS,))
    # (Loss, Loss) covers a double forfeit
    return sorted(result) == [LOSS, WIN] or set(result) == {LOSS}


def audit(records: Iterable[MatchRecord], games: Mapping[str, GameSpec]) -> AuditReport:
    """Replay every record; failures carry the reason for quarantine."""
    report = AuditReport()
    for record in records:
        spec = games.get(record.game_id)
        if spec is None:
            report.failures.append((record, f"unknown game {record.game_id!r}"))
            continue
        defect = replay_record(record, spec)
        if defect is None:
            report.ok.append(record)
        else:
            report.failures.append((record, defect))
    return report

"""Time control settings and clocks.

Records carry integer timestamps from a clock object. WallClock reads
epoch milliseconds; LogicalClock counts ticks so that seeded runs
produce byte-identical record files.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

DEFAULT_SETUP_MS = 60_000
DEFAULT_MOVE_MS = 5_000
DEFAULT_MAX_VIOLATIONS = 3


@dataclass(frozen=True)
class TimeControl:
    setup_ms: int = DEFAULT_SETUP_MS
    move_ms: int = DEFAULT_MOVE_MS
    max_violations: int = DEFAULT_MAX_VIOLATIONS

    def __post_init__(self):
        if self.setup_ms <= 0 or self.move_ms <= 0:
            raise ValueError("time control times must be positive")
        if self.max_violations < 1:
            raise ValueError("max_violations must be at least 1")


class LogicalClock:
    """Deterministic counter clock."""

    def __init__(self, start: int = 0):
        self._tick = start

    def now(self) -> int:
        self._tick += 1
        return self._tick


class WallClock:
    def now(self) -> int:
        return time.time_ns() // 1_000_000

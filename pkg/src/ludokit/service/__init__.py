"""Local play service: sessions, leaderboard, and live spectating."""

from .catalog import GameCatalog
from .sessions import (
    Feed,
    LiveFeedEvent,
    Session,
    SessionError,
    SessionManager,
    session_view,
)

__all__ = [
    "Feed",
    "GameCatalog",
    "LiveFeedEvent",
    "Session",
    "SessionError",
    "SessionManager",
    "create_app",
    "session_view",
]


def create_app(*args, **kwargs):
    """Deferred import so the core stays usable without FastAPI."""
    from .app import create_app as _create_app
    return _create_app(*args, **kwargs)

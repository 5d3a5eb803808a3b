"""General game system: description language, engine, agents, competition platform."""

__version__ = "0.1.0"

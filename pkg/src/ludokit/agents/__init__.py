"""Game-playing agents and the information-regime contract."""

from .base import (
    BLIND,
    DESCRIPTION_ONLY,
    FORWARD_MODEL,
    REGIMES,
    Agent,
    AgentConfigError,
    Budget,
    Observation,
    SimulateCapability,
    TrainingPhase,
    make_observation,
)
from .random_agent import RandomAgent
from .flat_mc import FlatMonteCarloAgent, flat_mc
from .uct import DEFAULT_C, UctAgent, UctSearch, uct_search
from .factory import AgentConfig, build_agent, parse_agent

import argparse
import os
from typing import Optional

from reward_route.errors import UsageError
from reward_route.ga import GAConfig
from reward_route.scenario import Scenario

THREADS_VARIABLE = "REWARD_ROUTE_THREADS"
_SOLVER_FLAGS = ['seed', 'max_iter', 'population_size', 'threads', 'p_m', 'elite', 'truncation', 'warp_fraction']


def default_threads() -> Optional[int]:
    value = os.environ.get(THREADS_VARIABLE)
    if value is None:
        return None
    try:
        return int(value)
    except ValueError:
        raise UsageError(f"{THREADS_VARIABLE} must be an integer (got '{value}')")


def solver_config(args: argparse.Namespace, scenario: Optional[Scenario] = None) -> GAConfig:
    """
    Flags override the scenario's 'solver' section, which overrides the defaults.
    """
    flags = {name: getattr(args, name, None) for name in _SOLVER_FLAGS}
    if flags['threads'] is None:
        flags['threads'] = default_threads()
    try:
        config = GAConfig()
        if scenario is not None:
            config = config.updated(scenario.solver)
        return config.updated(flags)
    except AssertionError as e:
        raise UsageError(f"Invalid solver settings: {e}") from e

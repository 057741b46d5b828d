import numpy as np
from typing import List
from typeguard import typechecked

from reward_route.scenario import Scenario, WaypointSequence

from .ga_config import GAConfig


def random_sequence(scenario: Scenario, rng: np.random.Generator) -> WaypointSequence:
    intermediates = np.array(scenario.intermediate_indices, dtype=int)
    k = int(rng.integers(0, len(intermediates) + 1))
    chosen = rng.choice(intermediates, size=k, replace=False) if k > 0 else []
    return WaypointSequence.wrap([int(i) for i in chosen], scenario)


@typechecked()
def init_population(scenario: Scenario, config: GAConfig, rng: np.random.Generator) -> List[WaypointSequence]:
    """
    Random sequences: a uniform length, then a uniform random selection and order of that many intermediate
    waypoints. Feasibility is not required.
    """
    return [random_sequence(scenario, rng) for _ in range(config.population_for(scenario))]

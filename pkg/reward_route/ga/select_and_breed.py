import math
import numpy as np
from typing import List
from typeguard import typechecked

from reward_route.fitness import EvaluatedIndividual
from reward_route.scenario import Scenario, WaypointSequence

from .crossover_subsequence import crossover_subsequence
from .crossover_warp import crossover_warp
from .ga_config import GAConfig
from .mutate import mutate


def stochastic_universal_sampling(weights: np.ndarray, count: int, rng: np.random.Generator) -> np.ndarray:
    """
    `count` equally spaced pointers with one random offset over the cumulative weights.
    """
    cumulative = np.cumsum(weights / np.sum(weights))
    pointers = rng.uniform(0, 1 / count) + np.arange(count) / count
    return np.minimum(np.searchsorted(cumulative, pointers, side='right'), len(weights) - 1)


@typechecked()
def select_and_breed(
        population: List[EvaluatedIndividual],
        config: GAConfig,
        scenario: Scenario,
        rng: np.random.Generator,
) -> List[WaypointSequence]:
    """
    Builds the next generation of the same size: the worst fraction T is discarded, the best fraction E
    (at least one) is copied unchanged and the rest are mutated offspring of parents drawn by stochastic
    universal sampling over the rank of the survivors. A fraction C of the offspring comes from the warp
    crossover, the rest from subsequence insertion.

    :return: Returns the new sequences, elites first.
    """
    c = len(population)
    ranked = sorted(population, key=lambda e: e.fitness)
    survivors = ranked[:c - int(math.floor(config.truncation * c))]

    elite_count = min(c, max(1, int(math.floor(config.elite * c + 0.5))))
    offspring_count = c - elite_count
    warp_count = int(math.floor(config.warp_fraction * offspring_count + 0.5))

    next_generation = [e.sequence for e in ranked[:elite_count]]
    if offspring_count == 0:
        return next_generation

    m = len(survivors)
    parents = rng.permutation(stochastic_universal_sampling(np.arange(m, 0, -1, dtype=np.float64), 2 * offspring_count, rng))
    for k in range(offspring_count):
        s1 = survivors[int(parents[2 * k])].sequence
        s2 = survivors[int(parents[2 * k + 1])].sequence
        if k < warp_count:
            child = crossover_warp(s1, s2, scenario, rng)
        else:
            child = crossover_subsequence(s1, s2, rng)
        next_generation.append(mutate(child, config.p_m, rng))
    return next_generation

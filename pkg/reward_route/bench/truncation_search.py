import numpy as np
from typing import Dict, Optional
from typeguard import typechecked

from reward_route.fitness import EvaluatedIndividual, FitnessContext, PenaltyWeights, build_context, evaluate_fitness
from reward_route.scenario import Scenario, WaypointSequence

from .decode_truncation import decode_truncation


@typechecked()
def truncation_search(
        scenario: Scenario,
        rng: np.random.Generator,
        budget: int = 1000,
        weights: Optional[PenaltyWeights] = None,
        context: Optional[FitnessContext] = None,
) -> EvaluatedIndividual:
    """
    Baseline with the truncation-based integer encoding: `budget` random vectors (labels..., k) are decoded
    and scored with the same fitness; the best one is returned.
    """
    assert budget >= 1, f"The budget must be positive (got {budget})."
    context = context if context is not None else build_context(scenario, weights)
    n = len(scenario.intermediate_indices)

    memo: Dict[WaypointSequence, EvaluatedIndividual] = {}
    best = None
    for _ in range(budget):
        x = [int(v) for v in rng.integers(1, n + 1, size=n)] + [int(rng.integers(0, n + 1))]
        seq = decode_truncation(x, n, scenario.fixed_end)
        if seq not in memo:
            memo[seq] = evaluate_fitness(seq, context)
        if best is None or memo[seq].fitness < best.fitness:
            best = memo[seq]
    return best

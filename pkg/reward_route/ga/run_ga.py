import time
import numpy as np
import pandas as pd
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List, Optional, Tuple
from typeguard import typechecked

from reward_route.fitness import EvaluatedIndividual, FitnessContext, PenaltyWeights, build_context, evaluate_fitness
from reward_route.scenario import Scenario, WaypointSequence

from .ga_config import GAConfig
from .init_population import init_population
from .select_and_breed import select_and_breed

HISTORY_COLUMNS = ['generation', 'best_h', 'mean_h', 'best_reward', 'feasible', 'elapsed', 'best_generation', 'evaluations']


def _log(detailed_output: bool, message: str):
    if detailed_output:
        print(message)


def _evaluate_all(
        population: List[WaypointSequence],
        context: FitnessContext,
        memo: Dict[WaypointSequence, EvaluatedIndividual],
        executor: Optional[ThreadPoolExecutor],
) -> List[EvaluatedIndividual]:
    pending = list(dict.fromkeys(s for s in population if s not in memo))
    if executor is not None:
        results = list(executor.map(lambda s: evaluate_fitness(s, context), pending))
    else:
        results = [evaluate_fitness(s, context) for s in pending]
    memo.update(zip(pending, results))
    return [memo[s] for s in population]


def _converged(best_values: List[float], window: int, epsilon: float) -> bool:
    return len(best_values) > window and best_values[-1 - window] - best_values[-1] < epsilon


@typechecked()
def run_ga(
        scenario: Scenario,
        config: GAConfig = GAConfig(),
        weights: Optional[PenaltyWeights] = None,
        rng: Optional[np.random.Generator] = None,
        context: Optional[FitnessContext] = None,
        initial_population: Optional[List[WaypointSequence]] = None,
        detailed_output: bool = False,
) -> Tuple[EvaluatedIndividual, pd.DataFrame]:
    """
    Evolves waypoint sequences until the best fitness stops improving (less than `convergence_epsilon` over
    `convergence_window` generations) or `max_iter` generations have run.

    All random draws happen while breeding, evaluations only read shared data; with one thread and a fixed
    seed two runs are identical. A sequence is evaluated at most once per run.

    :param scenario: The scenario.
    :param config: The solver settings.
    :param weights: Penalty weights (used when no `context` is given).
    :param rng: The random generator; defaults to one seeded with `config.seed`.
    :param context: A prepared fitness context, e.g. to share the route cache between runs.
    :param initial_population: Sequences that replace the first random individuals.
    :param detailed_output: Prints one line per generation.
    :return: Returns the best individual found and the per-generation history.
    """
    rng = rng if rng is not None else np.random.default_rng(config.seed)
    context = context if context is not None else build_context(scenario, weights)

    population = init_population(scenario, config, rng)
    if initial_population:
        for seq in initial_population:
            findings = seq.findings(scenario)
            assert not findings, f"Invalid seed sequence {seq.indices}: {'; '.join(findings)}."
        seeded = list(initial_population)[:len(population)]
        population[:len(seeded)] = seeded

    memo: Dict[WaypointSequence, EvaluatedIndividual] = {}
    best = None
    best_generation = 0
    rows = []
    start = time.perf_counter()
    executor = ThreadPoolExecutor(max_workers=config.threads) if config.threads > 1 else None
    try:
        for generation in range(config.max_iter):
            evaluated = _evaluate_all(population, context, memo, executor)
            generation_best = min(evaluated, key=lambda e: e.fitness)
            if best is None or generation_best.fitness < best.fitness:
                best = generation_best
                best_generation = generation

            rows.append([
                generation,
                best.fitness,
                float(np.mean([e.fitness for e in evaluated])),
                best.report.reward,
                int(best.report.feasible),
                time.perf_counter() - start,
                best_generation,
                len(memo),
            ])
            _log(detailed_output, f"Generation {generation}: best h = {best.fitness:.6f} (reward {best.report.reward:g}), "
                                  f"mean h = {rows[-1][2]:.4f}, {len(memo)} sequences evaluated.")

            if _converged([r[1] for r in rows], config.convergence_window, config.convergence_epsilon):
                _log(detailed_output, f"Converged after {generation + 1} generations.")
                break
            if generation + 1 < config.max_iter:
                population = select_and_breed(evaluated, config, scenario, rng)
    finally:
        if executor is not None:
            executor.shutdown()

    return best, pd.DataFrame(rows, columns=HISTORY_COLUMNS)

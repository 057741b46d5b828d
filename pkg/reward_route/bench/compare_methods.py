import time
import numpy as np
import pandas as pd
from typing import Optional, Sequence
from typeguard import typechecked

from reward_route.fitness import build_context
from reward_route.ga import GAConfig, run_ga

from .bench_result import BenchResult, fit_loglog_slope
from .brute_force_best import brute_force_best
from .enumerate_sequences import MAX_ENUMERATION
from .random_scenario import random_scenario
from .trial_seed import trial_seed
from .truncation_search import truncation_search

COMPARE_COLUMNS = [
    'n', 'trial', 'seed',
    'ga_h', 'ga_time_s',
    'truncation_h', 'truncation_time_s',
    'oracle_h', 'oracle_time_s',
]


@typechecked()
def compare_methods(
        counts: Sequence[int],
        trials: int,
        config: GAConfig = GAConfig(),
        seed: int = 0,
        truncation_budget: Optional[int] = None,
        progress_output: bool = False,
) -> BenchResult:
    """
    Solves every random scenario with the genetic algorithm, the truncation-encoded random search and, up to
    the enumeration limit, the exhaustive oracle. Every method gets a fresh route cache.

    :param truncation_budget: Samples of the truncation search; defaults to the number of distinct sequences
                              the genetic algorithm evaluated.
    :return: Returns best fitness and wall time per method (NaN where the oracle was skipped) and the
             log-log slope of the genetic algorithm's time.
    """
    assert len(counts) > 0, "At least one waypoint count is needed."
    assert trials >= 1, f"At least one trial per count is needed (got {trials})."

    rows = []
    for n in counts:
        for trial in range(trials):
            row_seed = trial_seed(seed, len(rows))
            scenario = random_scenario(int(n), np.random.default_rng([row_seed, 0]))

            start = time.perf_counter()
            ga_best, history = run_ga(scenario, config.updated({'seed': row_seed}))
            ga_time = time.perf_counter() - start

            budget = truncation_budget if truncation_budget is not None else int(history['evaluations'].iloc[-1])
            start = time.perf_counter()
            truncation_best = truncation_search(scenario, np.random.default_rng([row_seed, 1]), budget=budget,
                                                context=build_context(scenario))
            truncation_time = time.perf_counter() - start

            oracle_h, oracle_time = float('nan'), float('nan')
            if n <= MAX_ENUMERATION:
                start = time.perf_counter()
                oracle_h = brute_force_best(scenario).fitness
                oracle_time = time.perf_counter() - start

            rows.append([int(n), trial, row_seed, ga_best.fitness, ga_time, truncation_best.fitness, truncation_time,
                         oracle_h, oracle_time])
            if progress_output:
                print(f"n = {n}, trial {trial}: GA h = {ga_best.fitness:.6f}, truncation h = {truncation_best.fitness:.6f}, "
                      f"oracle h = {oracle_h:.6f}.")

    table = pd.DataFrame(rows, columns=COMPARE_COLUMNS)
    return BenchResult(table=table, slope=fit_loglog_slope(table, time_column='ga_time_s'))

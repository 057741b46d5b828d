import numpy as np
import pandas as pd
from typing import Sequence
from typeguard import typechecked

from reward_route.ga import GAConfig, run_ga

from .bench_result import BenchResult, BENCH_COLUMNS, fit_loglog_slope
from .random_scenario import random_scenario
from .trial_seed import trial_seed


@typechecked()
def complexity_sweep(
        counts: Sequence[int],
        trials_per_count: int,
        config: GAConfig = GAConfig(),
        seed: int = 0,
        progress_output: bool = False,
) -> BenchResult:
    """
    Runs the genetic algorithm on random scenarios for every waypoint count and measures the wall time to the
    best-found solution (including route cache warm-up).

    :param counts: Waypoint counts; duplicates give independent rows.
    :param trials_per_count: Random scenarios per count.
    :param config: Solver settings; the seed is replaced per row.
    :param seed: Run seed; every row derives its own seed from it and the row index.
    :return: Returns the table (n, trial, seed, best_h, best_reward, time_s) and the log-log slope.
    """
    assert len(counts) > 0, "At least one waypoint count is needed."
    assert trials_per_count >= 1, f"At least one trial per count is needed (got {trials_per_count})."

    rows = []
    for n in counts:
        for trial in range(trials_per_count):
            row_seed = trial_seed(seed, len(rows))
            scenario = random_scenario(int(n), np.random.default_rng([row_seed, 0]))
            best, history = run_ga(scenario, config.updated({'seed': row_seed}))
            best_row = history[history['generation'] == history['best_generation'].iloc[-1]].iloc[0]
            rows.append([int(n), trial, row_seed, best.fitness, best.report.reward, float(best_row['elapsed'])])
            if progress_output:
                print(f"n = {n}, trial {trial}: best h = {best.fitness:.6f} after {rows[-1][-1]:.2f} s.")

    table = pd.DataFrame(rows, columns=BENCH_COLUMNS)
    return BenchResult(table=table, slope=fit_loglog_slope(table))

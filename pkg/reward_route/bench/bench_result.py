import numpy as np
import pandas as pd
from dataclasses import dataclass
from typeguard import typechecked

BENCH_COLUMNS = ['n', 'trial', 'seed', 'best_h', 'best_reward', 'time_s']


@typechecked()
def fit_loglog_slope(table: pd.DataFrame, time_column: str = 'time_s') -> float:
    """
    Least-squares slope of log(time) over log(n); NaN with fewer than two distinct counts.
    """
    data = table[(table['n'] > 0) & (table[time_column] > 0)]
    if data['n'].nunique() < 2:
        return float('nan')
    slope, _ = np.polyfit(np.log(data['n'].to_numpy(dtype=np.float64)), np.log(data[time_column].to_numpy(dtype=np.float64)), 1)
    return float(slope)


@dataclass(frozen=True, eq=False)
class BenchResult():
    """
    One row per benchmark scenario plus the fitted growth exponent of the run time.
    """
    table: pd.DataFrame
    slope: float

import math
import pandas as pd
from pathlib import Path
from typeguard import typechecked

from reward_route.bench import BenchResult

FLOAT_FORMAT = '%.9g'


@typechecked()
def write_csv(frame: pd.DataFrame, file_path: Path):
    """
    Writes a table without index, floats with 9 significant digits.
    """
    file_path.parent.mkdir(parents=True, exist_ok=True)
    frame.to_csv(file_path, index=False, float_format=FLOAT_FORMAT)


@typechecked()
def write_bench_csv(result: BenchResult, file_path: Path):
    """
    Writes the benchmark table followed by a summary comment line with the fitted log-log slope
    (read back with `pd.read_csv(path, comment='#')`).
    """
    write_csv(result.table, file_path)
    slope = "nan" if math.isnan(result.slope) else FLOAT_FORMAT % result.slope
    with file_path.open("a") as f:
        f.write(f"# loglog_slope,{slope}\n")

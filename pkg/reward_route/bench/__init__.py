from .enumerate_sequences import enumerate_sequences, sequence_count, MAX_ENUMERATION
from .brute_force_best import brute_force_best
from .decode_truncation import decode_truncation
from .random_scenario import random_scenario, BENCHMARK_CONSTRAINTS, BENCHMARK_START, BENCHMARK_END
from .truncation_search import truncation_search
from .bench_result import BenchResult, BENCH_COLUMNS, fit_loglog_slope
from .trial_seed import trial_seed
from .complexity_sweep import complexity_sweep
from .compare_methods import compare_methods, COMPARE_COLUMNS

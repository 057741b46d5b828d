import argparse
from pathlib import Path

from reward_route.bench import complexity_sweep, compare_methods
from reward_route.data import write_bench_csv
from reward_route.errors import UsageError

from .solver_config import solver_config


def cmd_bench(args: argparse.Namespace) -> int:
    if args.trials < 1:
        raise UsageError(f"--trials must be positive (got {args.trials})")
    config = solver_config(args)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    if args.compare:
        result = compare_methods(args.counts, args.trials, config, seed=config.seed, progress_output=args.verbose)
    else:
        result = complexity_sweep(args.counts, args.trials, config, seed=config.seed, progress_output=args.verbose)

    write_bench_csv(result, out / "bench.csv")
    print(f"{len(result.table)} benchmark runs, log-log slope {result.slope:.3f}.")
    return 0

import argparse

from reward_route.errors import UsageError

from .cmd_bench import cmd_bench
from .cmd_oracle import cmd_oracle
from .cmd_plan import cmd_plan
from .solver_config import THREADS_VARIABLE


class ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _counts(text: str):
    try:
        counts = [int(c) for c in text.split(",") if c.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"'{text}' is not a comma separated list of integers")
    if not counts or any(c < 0 for c in counts):
        raise argparse.ArgumentTypeError(f"'{text}' needs at least one count, none negative")
    return counts


def _add_solver_flags(p: argparse.ArgumentParser):
    p.add_argument("--seed", type=int, help="random seed of the solver")
    p.add_argument("--max-iter", type=int, dest="max_iter", help="generation limit")
    p.add_argument("--pop-size", type=int, dest="population_size", help="population size")
    p.add_argument("--threads", type=int, help=f"fitness evaluation threads (fallback: ${THREADS_VARIABLE})")
    p.add_argument("--verbose", action="store_true", help="print progress")


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog="reward_route", description="Reward-collecting waypoint mission planner.")
    commands = parser.add_subparsers(dest="command_name", required=True, parser_class=ArgumentParser)

    plan = commands.add_parser("plan", help="plan a scenario with the genetic algorithm")
    plan.add_argument("--scenario", required=True, help="scenario document (JSON)")
    plan.add_argument("--out", default=".", help="output directory")
    _add_solver_flags(plan)
    plan.add_argument("--pm", type=float, dest="p_m", help="mutation probability")
    plan.add_argument("--elite", type=float, help="elite fraction")
    plan.add_argument("--trunc", type=float, dest="truncation", help="truncation fraction")
    plan.add_argument("--cmix", type=float, dest="warp_fraction", help="fraction of warp crossover offspring")
    plan.add_argument("--plot", action="store_true", help="also write plot.svg (needs kaleido); off by default")
    plan.set_defaults(command=cmd_plan)

    oracle = commands.add_parser("oracle", help="exhaustive optimum of a small scenario")
    oracle.add_argument("--scenario", required=True, help="scenario document (JSON)")
    oracle.add_argument("--out", default=".", help="output directory")
    oracle.add_argument("--verbose", action="store_true", help="print progress")
    oracle.set_defaults(command=cmd_oracle)

    bench = commands.add_parser("bench", help="time complexity benchmark on random scenarios")
    bench.add_argument("--counts", type=_counts, default=[10, 20, 30, 40, 50, 60], help="waypoint counts, e.g. 10,20")
    bench.add_argument("--trials", type=int, default=30, help="random scenarios per count")
    bench.add_argument("--out", default=".", help="output directory")
    bench.add_argument("--compare", action="store_true", help="add truncation search and oracle columns")
    _add_solver_flags(bench)
    bench.set_defaults(command=cmd_bench)
    return parser

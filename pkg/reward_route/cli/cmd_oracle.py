import argparse
from pathlib import Path

from reward_route.bench import brute_force_best
from reward_route.data import build_solution_document
from reward_route.scenario import load_scenario


def cmd_oracle(args: argparse.Namespace) -> int:
    scenario = load_scenario(Path(args.scenario).read_text())
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    best = brute_force_best(scenario, progress_output=args.verbose)
    (out / "oracle.json").write_text(build_solution_document(best, scenario).to_json())
    print(f"Optimal sequence {list(best.sequence.indices)}: h = {best.fitness:.6f}.")
    return 0

import argparse
import pandas as pd
from pathlib import Path

from reward_route.data import write_csv, build_solution_document
from reward_route.errors import UsageError
from reward_route.fitness import build_context, plan_trajectory, model_trace
from reward_route.flatness import flat_trace_from_trajectory
from reward_route.ga import run_ga
from reward_route.plots import draw_solution
from reward_route.scenario import load_scenario, Scenario
from reward_route.trajectory import Trajectory, TRAJECTORY_COLUMNS

from .solver_config import solver_config

EXIT_FEASIBLE = 0
EXIT_INFEASIBLE = 2
STATE_COLUMNS = ['t', 'x1', 'x2', 'x3', 'u1', 'u2']


def states_frame(trajectory: Trajectory, scenario: Scenario) -> pd.DataFrame:
    if len(trajectory) < 2:
        return pd.DataFrame(columns=STATE_COLUMNS)
    return model_trace(flat_trace_from_trajectory(trajectory), scenario).to_frame()


def cmd_plan(args: argparse.Namespace) -> int:
    scenario_path = Path(args.scenario)
    scenario = load_scenario(scenario_path.read_text())
    config = solver_config(args, scenario)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    context = build_context(scenario)
    best, history = run_ga(scenario, config, context=context, detailed_output=args.verbose)

    trajectory = None
    if best.report.failure is None:
        _, _, trajectory = plan_trajectory(best.sequence, context)

    document = build_solution_document(best, scenario, config, trajectory_file="trajectory.csv")
    (out / "solution.json").write_text(document.to_json())
    if trajectory is not None:
        write_csv(trajectory.to_frame(), out / "trajectory.csv")
        write_csv(states_frame(trajectory, scenario), out / "states.csv")
    else:
        write_csv(pd.DataFrame(columns=TRAJECTORY_COLUMNS), out / "trajectory.csv")
        write_csv(pd.DataFrame(columns=STATE_COLUMNS), out / "states.csv")
    write_csv(history[['generation', 'best_h', 'mean_h', 'best_reward', 'feasible']], out / "history.csv")

    if args.plot:
        fig = draw_solution(scenario, trajectory, best.sequence, title=scenario_path.stem, show=False)
        try:
            fig.write_image(str(out / "plot.svg"))
        except ValueError as e:
            # plotly reports a missing image export engine as ValueError
            raise UsageError(f"--plot needs the kaleido package: {e}") from e

    status = "feasible" if best.report.feasible else "infeasible"
    print(f"Best sequence {list(best.sequence.indices)}: h = {best.fitness:.6f}, reward {best.report.reward:g} ({status}).")
    return EXIT_FEASIBLE if best.report.feasible else EXIT_INFEASIBLE

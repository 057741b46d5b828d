import json
import math
import numpy as np
import pandas as pd
import pytest
from dataclasses import replace

from reward_route.bench import BenchResult, BENCH_COLUMNS
from reward_route.data import SolutionDocument, build_solution_document, reevaluate_solution, write_bench_csv, cached
from reward_route.errors import ScenarioValidationError
from reward_route.fitness import build_context, evaluate_fitness, plan_trajectory
from reward_route.ga import GAConfig
from reward_route.plots import draw_solution, draw_fitness_history, draw_complexity
from reward_route.scenario import WaypointSequence, Waypoint


@pytest.fixture
def tour(square_scenario):
    return evaluate_fitness(WaypointSequence((0, 1, 2, 3)), build_context(square_scenario))


def test_solution_document_round_trip(square_scenario, tour):
    document = build_solution_document(tour, square_scenario, GAConfig(seed=9), trajectory_file="trajectory.csv")

    assert SolutionDocument.from_json(document.to_json()) == document
    assert document.sequence == [0, 1, 2, 3]
    assert (document.seed, document.config['seed']) == (9, 9)
    assert reevaluate_solution(document, square_scenario) == tour.fitness


def test_failed_plan_stores_null_times(sealed_scenario):
    failed = evaluate_fitness(WaypointSequence((0, 1)), build_context(sealed_scenario))
    document = build_solution_document(failed, sealed_scenario)

    stored = json.loads(document.to_json())
    assert stored['t_f'] is None
    assert stored['failure'].startswith("NoPathError")
    assert stored['config'] == {}


def test_reevaluation_detects_a_changed_scenario(square_scenario, tour):
    document = build_solution_document(tour, square_scenario)
    moved = replace(square_scenario, waypoints=square_scenario.waypoints[:3] + (Waypoint(2.0, 7.5, 3.0),))

    with pytest.raises(ScenarioValidationError):
        reevaluate_solution(document, moved)


def test_bench_csv(tmp_path):
    table = pd.DataFrame([[10, 0, 1, 1.5, 4.0, 0.25], [20, 0, 2, 1.2, 6.0, 1.0]], columns=BENCH_COLUMNS)
    path = tmp_path / "bench.csv"
    write_bench_csv(BenchResult(table=table, slope=2.0), path)

    assert path.read_text().splitlines()[-1] == "# loglog_slope,2"
    back = pd.read_csv(path, comment="#")
    assert list(back.columns) == BENCH_COLUMNS
    np.testing.assert_allclose(back['time_s'], [0.25, 1.0])

    write_bench_csv(BenchResult(table=table.iloc[:1], slope=float('nan')), path)
    assert path.read_text().splitlines()[-1] == "# loglog_slope,nan"


def test_cached_reuses_the_stored_result(tmp_path):
    calls = []

    @cached(tmp_path / "cache" / "square.pickle")
    def square(x):
        calls.append(x)
        return x * x

    assert square(3) == 9
    assert square(3) == 9
    assert calls == [3]
    assert square(4) == 16
    assert calls == [3, 4]


def test_figures(square_scenario, tour):
    _, _, trajectory = plan_trajectory(tour.sequence, build_context(square_scenario))

    fig = draw_solution(square_scenario, trajectory, tour.sequence, show=False)
    assert len(fig.data) >= 2

    history = pd.DataFrame({'generation': [0, 1, 2], 'best_h': [3.0, 2.0, 1.0], 'mean_h': [5.0, 4.0, 2.0]})
    assert len(draw_fitness_history(history, show=False).data) == 2

    table = pd.DataFrame({'n': [10, 20, 40], 'time_s': [0.1, 0.4, 1.6]})
    assert len(draw_complexity(table, 2.0, show=False).data) == 2
    assert len(draw_complexity(table, math.nan, show=False).data) == 1

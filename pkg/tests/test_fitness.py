import math
import numpy as np
import pytest
from dataclasses import replace

from reward_route.bench import random_scenario
from reward_route.fitness import (
    PenaltyWeights, violation_time, violation_distance, violation_obstacle, violation_input, fitness_value,
    evaluate_fitness, build_context, plan_trajectory, evaluation_sample_count,
)
from reward_route.ga import random_sequence
from reward_route.scenario import Environment, AxisAlignedRect, ConstraintSet, WaypointSequence, rasterize
from reward_route.trajectory import ClothoidSegment, PiecewiseClothoid, parameterize_time


@pytest.mark.parametrize("t_f, expected", [(30, 0.0), (40, 0.0), (60, 0.5)])
def test_time_violation(t_f, expected):
    assert violation_time(t_f, 40.0) == pytest.approx(expected)


@pytest.mark.parametrize("d, expected", [(7.5, 0.0), (8.5, 0.0625), (16, 1.0)])
def test_distance_violation(d, expected):
    assert violation_distance(d, 8.0) == pytest.approx(expected)


def test_absent_bounds_are_never_violated():
    assert violation_time(1e6, None) == 0.0
    assert violation_distance(1e6, None) == 0.0


def test_input_violation():
    t = np.linspace(0.0, 10.0, 1001)

    assert violation_input(t, np.full_like(t, 1.5), 1.5) == 0.0
    assert violation_input(t, np.full_like(t, -3.0), 1.5) == pytest.approx(1.0)
    assert violation_input(t, np.where(t < 5.0, 2.0, 1.0), 1.0) == pytest.approx(0.5, abs=0.01)


def straight_trajectory(grid, start, end):
    segment = ClothoidSegment(x0=start[0], y0=start[1], theta0=0.0, kappa0=0.0, kappa_rate=0.0, length=end[0] - start[0])
    path = PiecewiseClothoid(segments=(segment,), knots=np.array([start, end], dtype=float), knot_indices=(0, 1))
    return parameterize_time(path, ConstraintSet(v_max=1.0), sample_count=evaluation_sample_count(path.total_length, grid.resolution))


def test_obstacle_violation():
    env = Environment(0.0, 10.0, 0.0, 2.0, obstacles=(AxisAlignedRect(5.0, 0.0, 5.0, 2.0),))
    grid = rasterize(env, 0.1)

    assert violation_obstacle(straight_trajectory(grid, (0.5, 1.0), (4.5, 1.0)), grid) == 0.0
    assert violation_obstacle(straight_trajectory(grid, (5.5, 1.0), (9.5, 1.0)), grid) == 1.0
    half = straight_trajectory(grid, (2.0, 1.0), (8.0, 1.0))
    assert violation_obstacle(half, grid) == pytest.approx(0.5, abs=2 * 0.1 / 6)


def test_weights_from_document():
    weights = PenaltyWeights.from_document({"time": 1, "obstacle": 50})

    assert weights == PenaltyWeights(alpha_time=1.0, alpha_obstacle=50.0)
    assert weights.channel_weight('input') == weights.alpha_input
    assert weights.channel_weight('state') == weights.alpha_state


def test_complete_tour_scores_one(square_scenario):
    best = evaluate_fitness(WaypointSequence((0, 1, 2, 3)), build_context(square_scenario))

    assert best.report.feasible
    assert best.report.reward == 6.0
    assert best.fitness == 1.0


def test_empty_sequence_scores_the_reward_floor(square_scenario):
    empty = evaluate_fitness(WaypointSequence((0,)), build_context(square_scenario))

    # g_max = 6, half the smallest reward = 0.5
    assert empty.fitness == 12.0
    assert empty.report.feasible
    assert empty.report.path_length == 0.0


def test_late_arrival_is_penalized(square_scenario):
    seq = WaypointSequence((0, 1, 2, 3))
    _, _, traj = plan_trajectory(seq, build_context(square_scenario))
    late = replace(square_scenario, constraints=ConstraintSet(v_max=1.0, t_max=traj.total_length / 1.2))

    individual = evaluate_fitness(seq, build_context(late))
    assert individual.report.time == pytest.approx(0.2)
    assert individual.fitness == pytest.approx(1 + 10 * 0.2)


def test_partial_tour_between_extremes(square_scenario):
    context = build_context(square_scenario)
    partial = evaluate_fitness(WaypointSequence((0, 3)), context)

    assert partial.fitness == pytest.approx(2.0)
    assert 1.0 < partial.fitness < evaluate_fitness(WaypointSequence((0,)), context).fitness


def test_unreachable_waypoint_fails_with_maximal_violations(sealed_scenario):
    context = build_context(sealed_scenario)
    failed = evaluate_fitness(WaypointSequence((0, 1)), context)

    assert failed.report.failure.startswith("NoPathError")
    assert not failed.report.feasible
    assert failed.report.as_dict() == {'time': 1.0, 'distance': 1.0, 'obstacle': 1.0, 'speed': 1.0}
    assert math.isinf(failed.report.t_f)
    # g_max / eps_g + 10 + 10 + 100 + 10
    assert failed.fitness == pytest.approx(2 / 0.5 + 130)
    assert failed.fitness > evaluate_fitness(WaypointSequence((0, 2, 1)), context).fitness - 1e-9


def test_stored_report_reproduces_the_fitness(square_scenario):
    context = build_context(square_scenario, weights=PenaltyWeights(alpha_time=3.0))
    for seq in [(0,), (0, 2), (0, 3, 1), (0, 1, 2, 3)]:
        individual = evaluate_fitness(WaypointSequence(seq), context)
        assert fitness_value(individual.report, square_scenario, context.weights) == individual.fitness


def test_route_cache_does_not_change_the_fitness(make_square):
    scenario = make_square(fixed_end=True, omega_max=0.3, accel_max=0.2)
    cached = build_context(scenario)
    uncached = build_context(scenario, use_cache=False)

    for seq in [(0, 3), (0, 1, 3), (0, 2, 1, 3), (0, 1, 2, 3)]:
        a = evaluate_fitness(WaypointSequence(seq, fixed_end=True), cached)
        b = evaluate_fitness(WaypointSequence(seq, fixed_end=True), uncached)
        assert a.fitness == b.fitness
        assert a.report == b.report
        assert set(a.report.channels) == {'speed', 'angular_rate', 'acceleration'}


def test_fitness_is_at_least_one(make_square):
    scenario = make_square(t_max=30.0, d_max=25.0, omega_max=0.5)
    context = build_context(scenario)
    rng = np.random.default_rng(5)

    for _ in range(10):
        k = int(rng.integers(0, 4))
        seq = WaypointSequence((0,) + tuple(int(i) for i in rng.permutation([1, 2, 3])[:k]))
        assert evaluate_fitness(seq, context).fitness >= 1.0


def test_invalid_sequence_is_rejected(square_scenario):
    with pytest.raises(AssertionError):
        evaluate_fitness(WaypointSequence((0, 1, 1)), build_context(square_scenario))


@pytest.mark.slow
def test_fitness_floor_over_many_sequences(make_square):
    scenarios = [
        make_square(),
        make_square(t_max=30.0, d_max=25.0, omega_max=0.5),
        make_square(t_max=20.0),
        random_scenario(4, np.random.default_rng(3)),
    ]
    rng = np.random.default_rng(17)
    for scenario in scenarios:
        context = build_context(scenario)
        for _ in range(2_500):
            individual = evaluate_fitness(random_sequence(scenario, rng), context)
            report = individual.report
            assert individual.fitness >= 1.0
            complete = report.feasible and report.reward == scenario.max_reward
            assert (individual.fitness == 1.0) == complete, f"{individual.sequence.indices}: {report}"

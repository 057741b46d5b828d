import math
import numpy as np
import pytest

from reward_route.fitness import build_context, evaluate_fitness
from reward_route.ga import (
    GAConfig, WaypointSequence, dtw_warp, crossover_warp, crossover_subsequence, mutate, init_population,
    select_and_breed, stochastic_universal_sampling, run_ga, random_sequence, HISTORY_COLUMNS,
)
from reward_route.scenario import Scenario, Environment, Waypoint, ConstraintSet


def monotone_paths(l1, l2):
    def extend(path):
        i, j = path[-1]
        if (i, j) == (l1 - 1, l2 - 1):
            yield path
            return
        for di, dj in [(1, 1), (1, 0), (0, 1)]:
            if i + di < l1 and j + dj < l2:
                yield from extend(path + [(i + di, j + dj)])

    return extend([(0, 0)])


def path_cost(s1, s2, pairs):
    return sum(float(np.linalg.norm(np.atleast_1d(s1[i] - s2[j]))) for i, j in pairs)


def test_dtw_identical_sequences():
    s = np.array([[0.0, 0.0], [1.0, 2.0], [3.0, 1.0]])
    alignment = dtw_warp(s, s)

    assert alignment.pairs == ((0, 0), (1, 1), (2, 2))
    assert alignment.cost == 0.0


def test_dtw_single_element():
    alignment = dtw_warp(np.array([0.0]), np.array([1.0, 2.0, 3.0, 4.0]))
    assert alignment.pairs == ((0, 0), (0, 1), (0, 2), (0, 3))


def test_dtw_prefers_the_diagonal():
    alignment = dtw_warp(np.array([1.0, 2.0, 3.0]), np.array([1.0, 3.0]))

    assert alignment.pairs == ((0, 0), (1, 0), (2, 1))
    assert alignment.cost == 1.0


@pytest.mark.parametrize("seed", range(15))
def test_dtw_is_minimal(seed):
    rng = np.random.default_rng(seed)
    s1 = rng.uniform(0, 5, size=(int(rng.integers(1, 6)), 2))
    s2 = rng.uniform(0, 5, size=(int(rng.integers(1, 6)), 2))
    alignment = dtw_warp(s1, s2)

    best = min(path_cost(s1, s2, p) for p in monotone_paths(len(s1), len(s2)))
    assert alignment.cost == pytest.approx(best)
    assert path_cost(s1, s2, alignment.pairs) == pytest.approx(alignment.cost)
    assert list(alignment.pairs) in list(monotone_paths(len(s1), len(s2)))


@pytest.fixture
def grid_scenario() -> Scenario:
    """
    Start, eight intermediates and a fixed end on a 3 x 3 lattice of 2 m spacing, shifted off the lattice
    so no two waypoints are equidistant from a blend.
    """
    points = [(1.0 + 2 * (k % 3) + 0.1 * k, 1.0 + 2 * (k // 3) + 0.05 * k) for k in range(9)]
    waypoints = [Waypoint(0.5, 0.5)] + [Waypoint(x, y, float(k + 1)) for k, (x, y) in enumerate(points)]
    waypoints.append(Waypoint(9.5, 9.5))
    return Scenario(
        environment=Environment(0.0, 10.0, 0.0, 10.0),
        waypoints=tuple(waypoints),
        constraints=ConstraintSet(v_max=1.0),
        fixed_end=True,
        grid_resolution=0.25,
    )


def test_warp_with_extreme_blends(grid_scenario):
    rng = np.random.default_rng(0)
    s1 = WaypointSequence((0, 2, 5, 10), True)
    s2 = WaypointSequence((0, 3, 4, 8, 10), True)

    assert crossover_warp(s1, s2, grid_scenario, rng, beta=0.0) == s1
    assert crossover_warp(s1, s2, grid_scenario, rng, beta=1.0) == s2


@pytest.mark.parametrize("seed", range(10))
def test_warp_children_are_valid(grid_scenario, seed):
    rng = np.random.default_rng(seed)
    for _ in range(10):
        s1 = WaypointSequence.wrap(rng.permutation(np.arange(1, 10))[:int(rng.integers(0, 10))].tolist(), grid_scenario)
        s2 = WaypointSequence.wrap(rng.permutation(np.arange(1, 10))[:int(rng.integers(0, 10))].tolist(), grid_scenario)
        child = crossover_warp(s1, s2, grid_scenario, rng)
        assert child.findings(grid_scenario) == []


def test_subsequence_examples():
    rng = np.random.default_rng(0)
    s1 = WaypointSequence((0, 1, 2, 3))
    s2 = WaypointSequence((0, 4, 5))

    assert crossover_subsequence(s1, s2, rng, span=(1, 1)) == s2
    assert crossover_subsequence(s1, s2, rng, span=(0, 3), position=1) == WaypointSequence((0, 4, 1, 2, 3, 5))
    assert crossover_subsequence(WaypointSequence((0, 2, 3, 9), True), WaypointSequence((0, 3, 1, 2, 9), True), rng,
                                 span=(0, 2), position=0) == WaypointSequence((0, 2, 3, 1, 9), True)


@pytest.mark.parametrize("seed", range(10))
def test_subsequence_children_are_valid(grid_scenario, seed):
    rng = np.random.default_rng(seed)
    for _ in range(10):
        s1 = WaypointSequence.wrap(rng.permutation(np.arange(1, 10))[:int(rng.integers(0, 10))].tolist(), grid_scenario)
        s2 = WaypointSequence.wrap(rng.permutation(np.arange(1, 10))[:int(rng.integers(0, 10))].tolist(), grid_scenario)
        child = crossover_subsequence(s1, s2, rng)
        assert child.findings(grid_scenario) == []
        assert set(s2.intermediates) <= set(child.intermediates)


def test_mutation():
    rng = np.random.default_rng(0)
    s = WaypointSequence((0, 1, 2, 3, 4), True)

    assert mutate(s, 0.0, rng, positions=(1, 3)) == WaypointSequence((0, 3, 2, 1, 4), True)
    assert mutate(WaypointSequence((0, 5, 9), True), 1.0, rng) == WaypointSequence((0, 5, 9), True)
    for _ in range(20):
        assert mutate(s, 0.0, rng) == s
    swapped = mutate(s, 1.0, rng)
    assert swapped != s
    assert (swapped[0], swapped[-1]) == (0, 4)
    assert sorted(swapped.intermediates) == [1, 2, 3]


def test_population(grid_scenario):
    config = GAConfig(population_size=100)
    population = init_population(grid_scenario, config, np.random.default_rng(1))

    assert len(population) == 100
    assert population == init_population(grid_scenario, config, np.random.default_rng(1))
    assert all(seq.findings(grid_scenario) == [] for seq in population)
    assert {len(seq.intermediates) for seq in population} == set(range(10))
    assert GAConfig().population_for(grid_scenario) == 20 * 11


def test_population_without_intermediates():
    scenario = Scenario(
        environment=Environment(0.0, 5.0, 0.0, 5.0),
        waypoints=(Waypoint(1.0, 1.0), Waypoint(4.0, 4.0)),
        constraints=ConstraintSet(v_max=1.0),
        fixed_end=True,
    )
    population = init_population(scenario, GAConfig(population_size=6), np.random.default_rng(0))
    assert population == [WaypointSequence((0, 1), True)] * 6


def test_universal_sampling_follows_the_weights():
    rng = np.random.default_rng(0)
    picks = stochastic_universal_sampling(np.array([3.0, 1.0]), 4, rng)

    assert sorted(picks.tolist()) == [0, 0, 0, 1]


def test_next_generation(grid_scenario):
    rng = np.random.default_rng(2)
    context = build_context(grid_scenario)
    config = GAConfig(population_size=10)
    population = [evaluate_fitness(s, context) for s in init_population(grid_scenario, config, rng)]

    children = select_and_breed(population, config, grid_scenario, rng)
    assert len(children) == 10
    assert children[0] == min(population, key=lambda e: e.fitness).sequence
    assert all(seq.findings(grid_scenario) == [] for seq in children)


def test_config_validation():
    with pytest.raises(AssertionError):
        GAConfig(population_size=2)
    with pytest.raises(AssertionError):
        GAConfig(elite=0.5, truncation=0.5)
    with pytest.raises(AssertionError):
        GAConfig().updated({'mutation': 0.2})

    config = GAConfig().updated({'p_m': 0.3, 'seed': None})
    assert (config.p_m, config.seed) == (0.3, 0)


def test_single_waypoint_is_found_early(single_scenario):
    best, history = run_ga(single_scenario, GAConfig(max_iter=5))

    assert best.sequence == WaypointSequence((0, 1))
    assert best.fitness == 1.0
    assert list(history.columns) == HISTORY_COLUMNS
    assert history['best_h'].iloc[-1] == 1.0


def test_nothing_to_collect():
    scenario = Scenario(
        environment=Environment(0.0, 5.0, 0.0, 5.0),
        waypoints=(Waypoint(1.0, 1.0), Waypoint(4.0, 1.0)),
        constraints=ConstraintSet(v_max=1.0),
        fixed_end=True,
        grid_resolution=0.25,
    )
    best, _ = run_ga(scenario, GAConfig(population_size=4, max_iter=2))

    assert best.sequence == WaypointSequence((0, 1), True)
    assert best.fitness == 1.0


def test_runs_are_reproducible(square_scenario):
    config = GAConfig(population_size=8, max_iter=6, seed=11)
    a_best, a_history = run_ga(square_scenario, config)
    b_best, b_history = run_ga(square_scenario, config)

    assert a_best.sequence == b_best.sequence
    columns = [c for c in HISTORY_COLUMNS if c != 'elapsed']
    assert a_history[columns].equals(b_history[columns])


def test_best_fitness_never_increases(grid_scenario):
    _, history = run_ga(grid_scenario, GAConfig(population_size=12, max_iter=8, seed=3))

    assert (history['best_h'].diff().dropna() <= 0).all()
    assert (history['best_h'] <= history['mean_h']).all()
    assert history['evaluations'].is_monotonic_increasing


def test_convergence_stops_early(single_scenario):
    _, history = run_ga(single_scenario, GAConfig(max_iter=100, convergence_window=3))
    assert len(history) == 4


def test_threads_give_the_same_result(square_scenario):
    single, _ = run_ga(square_scenario, GAConfig(population_size=8, max_iter=4, seed=5))
    threaded, _ = run_ga(square_scenario, GAConfig(population_size=8, max_iter=4, seed=5, threads=3))

    assert single.sequence == threaded.sequence
    assert single.fitness == threaded.fitness


def test_seed_sequences(square_scenario):
    seed = [WaypointSequence((0, 3, 2, 1))]
    best, history = run_ga(square_scenario, GAConfig(population_size=4, max_iter=1), initial_population=seed)

    assert best.fitness == 1.0
    assert len(history) == 1
    assert math.isclose(history['best_h'].iloc[0], 1.0)


@pytest.mark.slow
def test_dtw_matches_exhaustive_search_on_integer_sequences():
    rng = np.random.default_rng(11)
    for _ in range(200):
        s1 = rng.integers(0, 10, size=int(rng.integers(1, 7)))
        s2 = rng.integers(0, 10, size=int(rng.integers(1, 7)))
        alignment = dtw_warp(s1, s2)

        assert alignment.cost == min(path_cost(s1, s2, p) for p in monotone_paths(len(s1), len(s2)))
        assert path_cost(s1, s2, alignment.pairs) == alignment.cost


@pytest.mark.slow
def test_crossover_children_stay_valid_at_scale(grid_scenario):
    rng = np.random.default_rng(2024)
    parents = [random_sequence(grid_scenario, rng) for _ in range(500)]
    for n in range(100_000):
        s1, s2 = (parents[k] for k in rng.integers(0, len(parents), size=2))
        if n % 2 == 0:
            child = crossover_warp(s1, s2, grid_scenario, rng)
        else:
            child = crossover_subsequence(s1, s2, rng)
        assert child.findings(grid_scenario) == [], f"child {n}: {child.indices}"

    for s1, s2 in zip(parents[:50], parents[50:100]):
        assert crossover_warp(s1, s2, grid_scenario, rng, beta=0.0) == s1
        assert crossover_warp(s1, s2, grid_scenario, rng, beta=1.0) == s2

import numpy as np
from typeguard import typechecked

from reward_route.errors import SamplingError
from reward_route.scenario import Scenario, Waypoint, ConstraintSet, benchmark_environment, rasterize, is_free

BENCHMARK_START = (0.5, 0.5)
BENCHMARK_END = (9.5, 9.5)
BENCHMARK_RESOLUTION = 0.1
BENCHMARK_INFLATION = 0.1
BENCHMARK_CONSTRAINTS = ConstraintSet(v_max=1.0, v_min=0.1, d_max=200.0, omega_max=0.5)
MAX_ATTEMPTS = 10_000


@typechecked()
def random_scenario(intermediate_count: int, rng: np.random.Generator, fixed_end: bool = True) -> Scenario:
    """
    Random waypoints on the benchmark map: positions uniform over the free space (rejection sampling),
    rewards uniform integers 1..10, start in the lower left and, with `fixed_end`, end in the upper right
    corner.
    """
    assert intermediate_count >= 0, f"The intermediate count must not be negative (got {intermediate_count})."
    env = benchmark_environment()
    grid = rasterize(env, BENCHMARK_RESOLUTION, BENCHMARK_INFLATION)

    waypoints = [Waypoint(*BENCHMARK_START)]
    for n in range(intermediate_count):
        for _ in range(MAX_ATTEMPTS):
            p = (float(rng.uniform(env.x_min, env.x_max)), float(rng.uniform(env.y_min, env.y_max)))
            if is_free(grid, p):
                break
        else:
            raise SamplingError(f"Found no free position for waypoint {n + 1} in {MAX_ATTEMPTS} attempts.")
        waypoints.append(Waypoint(p[0], p[1], reward=float(rng.integers(1, 11))))
    if fixed_end:
        waypoints.append(Waypoint(*BENCHMARK_END))

    return Scenario(
        environment=env,
        waypoints=tuple(waypoints),
        constraints=BENCHMARK_CONSTRAINTS,
        fixed_end=fixed_end,
        grid_resolution=BENCHMARK_RESOLUTION,
        inflation_radius=BENCHMARK_INFLATION,
    )

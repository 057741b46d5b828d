from typing import List, Optional
from typeguard import typechecked

from .scenario import Scenario
from .occupancy_grid import OccupancyGrid
from .rasterize import rasterize
from .is_free import is_free


@typechecked()
def validate(scenario: Scenario, grid: Optional[OccupancyGrid] = None) -> List[str]:
    """
    Checks a scenario against its invariants.

    :param scenario: The scenario to check.
    :param grid: The inflated occupancy grid of the scenario; rasterized when not given.
    :return: Returns one human readable finding per violation; an empty list means the scenario is valid.
    """
    env = scenario.environment
    findings = []

    for n, o in enumerate(env.obstacles):
        if not (o.width > 0 and o.height > 0):
            findings.append(f"obstacle {n}: width and height must be positive (got {o.width} x {o.height})")
        elif o.x_max <= env.x_min or o.x >= env.x_max or o.y_max <= env.y_min or o.y >= env.y_max:
            findings.append(f"obstacle {n}: does not intersect the environment bounds")

    if grid is None:
        grid = rasterize(env, scenario.grid_resolution, scenario.inflation_radius)

    fixed = set(scenario.fixed_indices)
    for i, w in enumerate(scenario.waypoints):
        if not is_free(grid, w.position):
            findings.append(f"waypoint {i}: position ({w.x}, {w.y}) is not in the obstacle-free space")
        if i in fixed:
            if w.reward != 0:
                findings.append(f"waypoint {i}: fixed start/end waypoints carry no reward (got {w.reward})")
        elif not w.reward > 0:
            findings.append(f"waypoint {i}: intermediate reward must be positive (got {w.reward})")

    findings += scenario.constraints.findings()
    return findings

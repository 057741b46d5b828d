import math
from typing import Optional, Tuple
from typeguard import typechecked

from reward_route.scenario import WaypointSequence
from reward_route.search import GridPath, polyline_for_sequence
from reward_route.trajectory import PiecewiseClothoid, Trajectory, build_path, refine_collision, parameterize_time

from .fitness_context import FitnessContext


def evaluation_sample_count(length: float, resolution: float) -> int:
    # keeps the sample spacing at or below half a cell
    return max(100, int(math.ceil(2 * length / resolution)) + 1)


@typechecked()
def plan_trajectory(seq: WaypointSequence, context: FitnessContext) -> Tuple[GridPath, Optional[PiecewiseClothoid], Trajectory]:
    """
    Routes the sequence through the grid, interpolates its waypoints with clothoids, refines the path around
    obstacles with intermediate route points and allocates time stamps.

    :return: Returns the grid polyline, the clothoid path (None when the sequence never moves) and the trajectory.
    """
    scenario = context.scenario
    polyline = polyline_for_sequence(context.grid, seq, scenario, context.cache)
    if len(polyline) < 2:
        x, y = polyline.points[0]
        heading = scenario.initial_heading if scenario.initial_heading is not None else 0.0
        return polyline, None, Trajectory.stationary(float(x), float(y), heading)

    knots = [j for k, j in enumerate(polyline.junctions) if k == 0 or j != polyline.junctions[k - 1]]
    path = build_path(
        GridPath.from_points(polyline.points[knots]),
        initial_heading=scenario.initial_heading,
        knot_indices=tuple(knots),
    )
    path = refine_collision(path, polyline, context.grid)
    trajectory = parameterize_time(
        path,
        scenario.constraints,
        sample_count=evaluation_sample_count(path.total_length, context.grid.resolution),
        options=context.timing,
    )
    return polyline, path, trajectory

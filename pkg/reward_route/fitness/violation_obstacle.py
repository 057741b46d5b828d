import numpy as np
from typeguard import typechecked

from reward_route.scenario import OccupancyGrid
from reward_route.trajectory import Trajectory


@typechecked()
def violation_obstacle(traj: Trajectory, grid: OccupancyGrid) -> float:
    """
    Fraction of the path length outside the free space, from the trapezoidal sum of the free indicator
    over the arc length increments. The samples should be spaced at most half a cell apart.

    :return: Returns a value in [0, 1]; 0 when the whole path is free.
    """
    if traj.total_length <= 0:
        return 0.0
    free = grid.is_free_many(traj.positions)
    if np.all(free):
        return 0.0
    free = free.astype(np.float64)
    ds = np.diff(traj.s)
    free_length = float(np.sum(ds * (free[1:] + free[:-1]) / 2))
    return min(1.0, max(0.0, 1.0 - free_length / traj.total_length))

import numpy as np
from typing import Optional
from typeguard import typechecked

from reward_route.errors import NoPathError
from reward_route.scenario import OccupancyGrid, Scenario, WaypointSequence

from .astar import astar
from .grid_path import GridPath
from .pairwise_cache import PairwiseCache


def pairwise_path(grid: OccupancyGrid, scenario: Scenario, a: int, b: int, cache: Optional[PairwiseCache] = None) -> GridPath:
    # searched from the lower to the higher index, reversed on demand, so cached and uncached runs agree
    low, high = min(a, b), max(a, b)

    def compute():
        try:
            return astar(grid, scenario.waypoints[low].position, scenario.waypoints[high].position)
        except NoPathError as e:
            raise NoPathError("No obstacle-free path between waypoints", pair=(low, high)) from e

    path = cache.get_or_compute((low, high), compute) if cache is not None else compute()
    return path if a == low else path.reversed()


@typechecked()
def polyline_for_sequence(
        grid: OccupancyGrid,
        seq: WaypointSequence,
        scenario: Scenario,
        cache: Optional[PairwiseCache] = None,
) -> GridPath:
    """
    Concatenates the pairwise routes between consecutive waypoints of a sequence.

    :param grid: The inflated occupancy grid of the scenario.
    :param seq: The waypoint sequence.
    :param scenario: The scenario the sequence indexes into.
    :param cache: Pairwise route memo, shared by all evaluations of one scenario.
    :return: Returns the concatenated path; `junctions` marks the point index of every sequence waypoint.
    """
    assert len(seq) >= 1, "Cannot route an empty sequence."

    points = [np.asarray(scenario.waypoints[seq[0]].position, dtype=np.float64)]
    junctions = [0]
    for a, b in zip(seq.indices, seq.indices[1:]):
        route = pairwise_path(grid, scenario, a, b, cache)
        for p in route.points[1:]:
            if not np.array_equal(p, points[-1]):
                points.append(p)
        junctions.append(len(points) - 1)

    return GridPath.from_points(np.array(points), tuple(junctions))

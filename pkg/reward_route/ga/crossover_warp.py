import numpy as np
from typing import Optional
from typeguard import typechecked

from reward_route.scenario import Scenario, WaypointSequence

from .dtw_warp import dtw_warp

BETA_RANGE = (-0.15, 1.15)


def project_to_waypoints(points: np.ndarray, waypoints: np.ndarray) -> np.ndarray:
    """
    Index of the nearest waypoint for every point; ties go to the lowest index.
    """
    d = np.sum((points[:, None, :] - waypoints[None, :, :]) ** 2, axis=2)
    return np.argmin(d, axis=1)


@typechecked()
def crossover_warp(
        s1: WaypointSequence,
        s2: WaypointSequence,
        scenario: Scenario,
        rng: np.random.Generator,
        beta: Optional[float] = None,
) -> WaypointSequence:
    """
    Crossover of two sequences of different length: the waypoint positions of both parents are aligned by
    dynamic time warping, every aligned pair is blended (1 - beta) p1 + beta p2 with beta drawn uniformly
    from [-0.15, 1.15] per pair, and the blend is projected onto the nearest waypoint. Fixed waypoints and
    repeats (first occurrence wins) are dropped from the intermediates.

    :param beta: Uses this blend factor for every pair instead of random draws.
    """
    positions = scenario.positions
    alignment = dtw_warp(positions[list(s1.indices)], positions[list(s2.indices)])
    i = np.array([p[0] for p in alignment.pairs])
    j = np.array([p[1] for p in alignment.pairs])

    if beta is None:
        b = rng.uniform(BETA_RANGE[0], BETA_RANGE[1], size=len(alignment))
    else:
        b = np.full(len(alignment), beta)
    blended = (1 - b)[:, None] * positions[np.array(s1.indices)[i]] + b[:, None] * positions[np.array(s2.indices)[j]]

    fixed = set(scenario.fixed_indices)
    intermediates = []
    for index in project_to_waypoints(blended, positions):
        index = int(index)
        if index not in fixed and index not in intermediates:
            intermediates.append(index)
    return WaypointSequence.wrap(intermediates, scenario)

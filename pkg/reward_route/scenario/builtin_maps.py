from typing import Optional
from typeguard import typechecked

from .environment import Environment, AxisAlignedRect
from .waypoint import Waypoint
from .constraint_set import ConstraintSet, QuadrupedParams
from .scenario import Scenario, RobotModel

BOOSTED_REWARD = 5.0

# start and end coincide (surveillance round trip)
_SURVEILLANCE_HOME = (5.0, 0.8)
_SURVEILLANCE_WAYPOINTS = [
    (2.0, 1.5), (0.8, 3.5), (1.2, 6.0), (0.8, 9.2), (3.0, 8.0), (5.0, 9.3), (7.0, 8.2),
    (9.2, 9.2), (8.8, 6.2), (9.2, 3.5), (8.0, 1.5), (3.2, 3.2), (6.8, 4.0), (5.0, 6.5),
]
_SURVEILLANCE_OBSTACLES = [
    AxisAlignedRect(4.0, 3.8, 2.0, 1.6),
    AxisAlignedRect(2.2, 4.6, 0.3, 2.4),
    AxisAlignedRect(7.4, 5.0, 0.3, 2.4),
    AxisAlignedRect(3.8, 7.4, 2.4, 0.3),
    AxisAlignedRect(6.0, 2.0, 1.2, 0.5),
]


@typechecked()
def surveillance_map(reward_boost: Optional[int] = None, grid_resolution: float = 0.05) -> Scenario:
    """
    A 10 m x 10 m round-trip mission: 14 intermediate waypoints of reward 1, a mission time window of 40 s
    and a speed bound of 1 m/s, no distance bound.

    :param reward_boost: Index of an intermediate waypoint (1..14) whose reward is raised to 5.
    :param grid_resolution: The occupancy grid resolution in meters.
    """
    waypoints = [Waypoint(*_SURVEILLANCE_HOME, reward=0.0)]
    waypoints += [Waypoint(x, y, reward=1.0) for x, y in _SURVEILLANCE_WAYPOINTS]
    waypoints += [Waypoint(*_SURVEILLANCE_HOME, reward=0.0)]

    if reward_boost is not None:
        assert 1 <= reward_boost <= len(_SURVEILLANCE_WAYPOINTS), f"There is no intermediate waypoint {reward_boost}."
        w = waypoints[reward_boost]
        waypoints[reward_boost] = Waypoint(w.x, w.y, reward=BOOSTED_REWARD)

    return Scenario(
        environment=Environment(0.0, 10.0, 0.0, 10.0, obstacles=tuple(_SURVEILLANCE_OBSTACLES)),
        waypoints=tuple(waypoints),
        constraints=ConstraintSet(v_max=1.0, t_max=40.0),
        fixed_end=True,
        grid_resolution=grid_resolution,
        inflation_radius=0.15,
    )


@typechecked()
def arena_map(standard_body_twist: bool = True) -> Scenario:
    """
    The 5 m x 3 m indoor arena with two obstacles for the quadruped: nine intermediate waypoints with
    rewards 2, 4, ..., 18, fixed start and end and a distance bound of 7.5 m.
    """
    positions = [(0.5, 2.5), (1.0, 0.8), (1.2, 1.5), (2.4, 0.5), (2.5, 2.5), (2.7, 1.2), (3.8, 0.5), (4.0, 1.5), (4.6, 0.6)]
    waypoints = [Waypoint(0.4, 0.4)]
    waypoints += [Waypoint(x, y, reward=2.0 * (n + 1)) for n, (x, y) in enumerate(positions)]
    waypoints += [Waypoint(4.6, 2.6)]

    return Scenario(
        environment=Environment(
            0.0, 5.0, 0.0, 3.0,
            obstacles=(AxisAlignedRect(1.5, 0.0, 0.5, 1.6), AxisAlignedRect(3.0, 1.4, 0.5, 1.6)),
        ),
        waypoints=tuple(waypoints),
        constraints=ConstraintSet(v_max=0.6, d_max=7.5),
        fixed_end=True,
        model=RobotModel.QUADRUPED,
        model_params=QuadrupedParams(standard_body_twist=standard_body_twist),
        grid_resolution=0.05,
        inflation_radius=0.15,
    )


@typechecked()
def benchmark_environment() -> Environment:
    return Environment(
        0.0, 10.0, 0.0, 10.0,
        obstacles=(
            AxisAlignedRect(2.0, 2.0, 1.5, 1.0),
            AxisAlignedRect(5.0, 1.0, 1.0, 2.5),
            AxisAlignedRect(1.0, 6.0, 2.5, 1.0),
            AxisAlignedRect(4.5, 5.0, 1.5, 1.5),
            AxisAlignedRect(7.5, 3.0, 1.0, 2.0),
            AxisAlignedRect(6.5, 7.5, 2.0, 0.8),
        ),
    )

import json
import pytest

from reward_route.scenario import Scenario, Environment, AxisAlignedRect, Waypoint, ConstraintSet


def _square(fixed_end: bool = False, **constraints) -> Scenario:
    return Scenario(
        environment=Environment(0.0, 10.0, 0.0, 10.0),
        waypoints=(Waypoint(2.0, 2.0), Waypoint(8.0, 2.0, 1.0), Waypoint(8.0, 8.0, 2.0), Waypoint(2.0, 8.0, 3.0)),
        constraints=ConstraintSet(v_max=1.0, **constraints),
        fixed_end=fixed_end,
        grid_resolution=0.2,
    )


@pytest.fixture
def square_scenario() -> Scenario:
    """
    Three intermediate waypoints (rewards 1, 2, 3) on the corners of an obstacle-free 6 m square.
    """
    return _square()


@pytest.fixture
def make_square():
    return _square


@pytest.fixture
def sealed_scenario() -> Scenario:
    """
    Waypoint 1 sits inside a closed box of walls, waypoint 2 is reachable.
    """
    walls = (
        AxisAlignedRect(4.0, 4.0, 2.0, 0.4),
        AxisAlignedRect(4.0, 5.6, 2.0, 0.4),
        AxisAlignedRect(4.0, 4.0, 0.4, 2.0),
        AxisAlignedRect(5.6, 4.0, 0.4, 2.0),
    )
    return Scenario(
        environment=Environment(0.0, 10.0, 0.0, 10.0, obstacles=walls),
        waypoints=(Waypoint(2.0, 2.0), Waypoint(5.0, 5.0, 1.0), Waypoint(8.0, 2.0, 1.0)),
        constraints=ConstraintSet(v_max=1.0),
        grid_resolution=0.2,
    )


@pytest.fixture
def single_scenario() -> Scenario:
    return Scenario(
        environment=Environment(0.0, 10.0, 0.0, 10.0),
        waypoints=(Waypoint(2.0, 2.0), Waypoint(8.0, 2.0, 1.0)),
        constraints=ConstraintSet(v_max=1.0),
        grid_resolution=0.2,
    )


@pytest.fixture
def scenario_document() -> dict:
    return {
        "bounds": {"x_min": 0, "x_max": 6, "y_min": 0, "y_max": 6},
        "obstacles": [{"x": 2.5, "y": 2.5, "w": 1.0, "h": 1.0}],
        "waypoints": [{"x": 1, "y": 1}, {"x": 5, "y": 1, "reward": 1}, {"x": 5, "y": 5, "reward": 2}],
        "constraints": {"v_max": 1.0},
        "grid": {"resolution": 0.2, "inflation": 0.1},
    }


@pytest.fixture
def scenario_file(tmp_path, scenario_document):
    path = tmp_path / "scenario.json"
    path.write_text(json.dumps(scenario_document))
    return path

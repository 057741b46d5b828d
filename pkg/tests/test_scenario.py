import json
import math
import numpy as np
import pytest

from reward_route.errors import ScenarioParseError, ScenarioValidationError
from reward_route.scenario import (
    Environment, AxisAlignedRect, Waypoint, ConstraintSet, Scenario, RobotModel, WaypointSequence,
    DEFAULT_GRID_RESOLUTION, BOOSTED_REWARD, load_scenario, save_scenario, scenario_digest, rasterize, is_free,
    validate, surveillance_map, arena_map,
)

MINIMAL = {"bounds": {"x_min": 0, "x_max": 4, "y_min": 0, "y_max": 4}, "waypoints": [{"x": 1, "y": 1}],
           "constraints": {"v_max": 1.0}}


def test_minimal_document_applies_defaults():
    scenario = load_scenario(json.dumps(MINIMAL))

    assert scenario.environment.obstacles == ()
    assert scenario.constraints.t_max is None
    assert scenario.constraints.d_max is None
    assert scenario.constraints.v_min == 0.0
    assert not scenario.fixed_end
    assert scenario.model is RobotModel.DIFFERENTIAL_DRIVE
    assert scenario.grid_resolution == DEFAULT_GRID_RESOLUTION
    assert scenario.inflation_radius == 0.0
    assert scenario.intermediate_indices == ()
    assert scenario.max_reward == 0.0


def test_malformed_document_reports_position():
    with pytest.raises(ScenarioParseError) as e:
        load_scenario('{"bounds": {"x_min": 0,\n  "x_max": }')
    assert e.value.line == 2


def test_unknown_field_is_rejected():
    document = json.loads(json.dumps(MINIMAL))
    document["constraints"]["speed"] = 2.0

    with pytest.raises(ScenarioParseError) as e:
        load_scenario(json.dumps(document))
    assert e.value.field == "constraints"


def test_waypoint_inside_obstacle_is_named(scenario_document):
    scenario_document["waypoints"].append({"x": 3.0, "y": 3.0, "reward": 1})

    with pytest.raises(ScenarioValidationError) as e:
        load_scenario(json.dumps(scenario_document))
    assert len(e.value.findings) == 1
    assert e.value.findings[0].startswith("waypoint 3")


def test_start_inside_inflated_obstacle(scenario_document):
    scenario_document["waypoints"][0] = {"x": 2.45, "y": 3.0}
    scenario = load_scenario(json.dumps(scenario_document), check=False)

    findings = validate(scenario)
    assert len(findings) == 1
    assert findings[0].startswith("waypoint 0")


def test_speed_band_finding(scenario_document):
    scenario_document["constraints"] = {"v_max": 1.0, "v_min": 2.0}
    scenario = load_scenario(json.dumps(scenario_document), check=False)

    findings = validate(scenario)
    assert len(findings) == 1
    assert "v_min" in findings[0]


def test_rewards_of_fixed_and_intermediate_waypoints(scenario_document):
    scenario_document["waypoints"][0]["reward"] = 1.0
    scenario_document["waypoints"][1]["reward"] = 0.0
    scenario = load_scenario(json.dumps(scenario_document), check=False)

    findings = validate(scenario)
    assert [f.split(":")[0] for f in findings] == ["waypoint 0", "waypoint 1"]


def test_save_and_load_reproduce_the_scenario(scenario_file):
    scenario = load_scenario(scenario_file.read_text())
    assert load_scenario(save_scenario(scenario)) == scenario


@pytest.mark.parametrize("scenario", [surveillance_map(), surveillance_map(reward_boost=13), arena_map()])
def test_builtin_maps_are_valid_and_reload(scenario):
    assert validate(scenario) == []
    assert load_scenario(save_scenario(scenario)) == scenario


def test_surveillance_boost():
    scenario = surveillance_map(reward_boost=13)

    assert scenario.waypoints[13].reward == BOOSTED_REWARD
    assert scenario.max_reward == 13 + BOOSTED_REWARD
    assert scenario.fixed_end
    assert scenario.waypoints[0].position == scenario.waypoints[-1].position


def test_digest_follows_content(scenario_file):
    scenario = load_scenario(scenario_file.read_text())
    changed = Scenario(
        environment=scenario.environment,
        waypoints=scenario.waypoints[:-1] + (Waypoint(5.0, 5.0, 3.0),),
        constraints=scenario.constraints,
        grid_resolution=scenario.grid_resolution,
        inflation_radius=scenario.inflation_radius,
    )

    assert scenario_digest(scenario) == scenario_digest(load_scenario(save_scenario(scenario)))
    assert scenario_digest(scenario) != scenario_digest(changed)


def test_rasterize_without_obstacles():
    grid = rasterize(Environment(0.0, 2.0, 0.0, 1.0), 0.1)

    assert (grid.width, grid.height) == (20, 10)
    assert not grid.cells.any()


def test_rasterize_covering_obstacle():
    grid = rasterize(Environment(0.0, 2.0, 0.0, 1.0, obstacles=(AxisAlignedRect(0.0, 0.0, 2.0, 1.0),)), 0.1)
    assert grid.cells.all()


def test_inflation_matches_point_to_rectangle_distance():
    o = AxisAlignedRect(2.0, 2.0, 1.0, 1.0)
    grid = rasterize(Environment(0.0, 5.0, 0.0, 5.0, obstacles=(o,)), 0.1, 0.5)

    for iy in range(grid.height):
        for ix in range(grid.width):
            cx, cy = grid.cell_center(ix, iy)
            dx = max(o.x - cx, 0.0, cx - o.x_max)
            dy = max(o.y - cy, 0.0, cy - o.y_max)
            assert grid.cells[iy, ix] == (math.hypot(dx, dy) <= 0.5)


def test_is_free():
    o = AxisAlignedRect(1.0, 1.0, 1.0, 1.0)
    grid = rasterize(Environment(0.0, 4.0, 0.0, 4.0, obstacles=(o,)), 0.2)

    assert not is_free(grid, (4.5, 1.0))
    assert not is_free(grid, (-0.1, 1.0))
    assert is_free(grid, (0.3, 0.3))
    assert not is_free(grid, (1.5, 1.5))
    # a point on a cell boundary belongs to the cell above and to the right
    assert grid.cell_of(0.2, 0.4) == (1, 2)


def test_is_free_agrees_with_exact_containment():
    o = AxisAlignedRect(1.0, 1.0, 1.5, 0.7)
    grid = rasterize(Environment(0.0, 4.0, 0.0, 4.0, obstacles=(o,)), 0.01)
    rng = np.random.default_rng(3)
    margin = 0.01 * math.sqrt(2)

    for p in rng.uniform(0.0, 4.0, size=(500, 2)):
        near_boundary = (o.x - margin < p[0] < o.x_max + margin and o.y - margin < p[1] < o.y_max + margin) and \
                        not (o.x + margin < p[0] < o.x_max - margin and o.y + margin < p[1] < o.y_max - margin)
        if not near_boundary:
            assert is_free(grid, p) == (not o.contains(*p))


def test_sequence_wrap_and_findings(make_square):
    scenario = make_square(fixed_end=True)

    seq = WaypointSequence.wrap([2, 1], scenario)
    assert seq.indices == (0, 2, 1, 3)
    assert seq.intermediates == (2, 1)
    assert seq.findings(scenario) == []

    assert WaypointSequence((0, 1, 1, 3), True).findings(scenario) == ["sequence contains duplicate waypoints"]
    assert WaypointSequence((0, 1, 2), True).findings(scenario) != []
    assert WaypointSequence((0, 3, 1, 3), True).findings(scenario) != []


def test_constraint_findings():
    assert ConstraintSet(v_max=1.0).findings() == []
    assert len(ConstraintSet(v_max=1.0, t_max=0.0).findings()) == 1
    assert len(ConstraintSet(v_max=1.0, v_min=-1.0).findings()) == 1

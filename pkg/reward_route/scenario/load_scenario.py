import json
import jsonschema
from typeguard import typechecked

from reward_route.errors import ScenarioParseError, ScenarioValidationError

from .environment import Environment, AxisAlignedRect
from .waypoint import Waypoint
from .constraint_set import ConstraintSet, DiffDriveParams, QuadrupedParams
from .scenario import Scenario, RobotModel, DEFAULT_GRID_RESOLUTION
from .validate import validate

_NUMBER = {"type": "number"}
_POSITIVE = {"type": "number", "exclusiveMinimum": 0}
_FRACTION = {"type": "number", "minimum": 0, "maximum": 1}


def _object(properties, required=()):
    return {
        "type": "object",
        "properties": properties,
        "required": list(required),
        "additionalProperties": False,
    }


SCENARIO_SCHEMA = _object(
    {
        "bounds": _object(
            {"x_min": _NUMBER, "x_max": _NUMBER, "y_min": _NUMBER, "y_max": _NUMBER},
            required=["x_min", "x_max", "y_min", "y_max"],
        ),
        "obstacles": {
            "type": "array",
            "items": _object({"x": _NUMBER, "y": _NUMBER, "w": _NUMBER, "h": _NUMBER}, required=["x", "y", "w", "h"]),
        },
        "waypoints": {
            "type": "array",
            "minItems": 1,
            "items": _object({"x": _NUMBER, "y": _NUMBER, "reward": _NUMBER}, required=["x", "y"]),
        },
        "fixed_end": {"type": "boolean"},
        "constraints": _object(
            {
                "t_max": _NUMBER,
                "d_max": _NUMBER,
                "v_max": _NUMBER,
                "v_min": _NUMBER,
                "omega_max": _NUMBER,
                "accel_max": _NUMBER,
            },
            required=["v_max"],
        ),
        "model": {"enum": [m.value for m in RobotModel]},
        "model_params": _object({"r": _POSITIVE, "d_v": _POSITIVE, "standard_body_twist": {"type": "boolean"}}),
        "grid": _object({"resolution": _POSITIVE, "inflation": {"type": "number", "minimum": 0}}),
        "initial_heading": _NUMBER,
        "solver": _object({
            "population_size": {"type": "integer", "minimum": 4},
            "beta_p": _POSITIVE,
            "max_iter": {"type": "integer", "minimum": 1},
            "p_m": _FRACTION,
            "elite": _FRACTION,
            "truncation": _FRACTION,
            "warp_fraction": _FRACTION,
            "convergence_window": {"type": "integer", "minimum": 1},
            "convergence_epsilon": {"type": "number", "minimum": 0},
            "seed": {"type": "integer", "minimum": 0},
        }),
        "weights": _object({
            "time": {"type": "number", "minimum": 0},
            "distance": {"type": "number", "minimum": 0},
            "obstacle": {"type": "number", "minimum": 0},
            "input": {"type": "number", "minimum": 0},
            "state": {"type": "number", "minimum": 0},
        }),
        "timing": _object({"cruise_factor": _POSITIVE, "min_speed_factor": _POSITIVE}),
    },
    required=["bounds", "waypoints", "constraints"],
)


def _parse_json(text: str) -> dict:
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise ScenarioParseError(f"Malformed scenario document: {e.msg}", line=e.lineno, column=e.colno) from e

    errors = sorted(jsonschema.Draft7Validator(SCENARIO_SCHEMA).iter_errors(document), key=lambda e: list(e.absolute_path))
    if errors:
        e = errors[0]
        field = "/".join(str(p) for p in e.absolute_path) or "<document>"
        raise ScenarioParseError(f"Scenario document does not match the format: {e.message}", field=field)
    return document


def _model_params(model: RobotModel, params: dict):
    if model is RobotModel.DIFFERENTIAL_DRIVE:
        if 'standard_body_twist' in params:
            raise ScenarioParseError("Only the quadruped model accepts 'standard_body_twist'", field="model_params")
        if not params:
            return None
        if 'r' not in params or 'd_v' not in params:
            raise ScenarioParseError("Differential drive parameters need both 'r' and 'd_v'", field="model_params")
        return DiffDriveParams(wheel_radius=params['r'], track_width=params['d_v'])

    if 'r' in params or 'd_v' in params:
        raise ScenarioParseError("The quadruped model takes no wheel parameters", field="model_params")
    if not params:
        return None
    return QuadrupedParams(standard_body_twist=params.get('standard_body_twist', False))


@typechecked()
def load_scenario(text: str, check: bool = True) -> Scenario:
    """
    Parses a scenario document (JSON) and applies all defaults.

    :param text: The document text.
    :param check: Validates the parsed scenario and raises when findings exist.
    :return: Returns the scenario.
    """
    document = _parse_json(text)

    bounds = document['bounds']
    if not (bounds['x_min'] < bounds['x_max'] and bounds['y_min'] < bounds['y_max']):
        raise ScenarioValidationError(["bounds: x_min < x_max and y_min < y_max are required"])
    environment = Environment(
        x_min=bounds['x_min'],
        x_max=bounds['x_max'],
        y_min=bounds['y_min'],
        y_max=bounds['y_max'],
        obstacles=tuple(AxisAlignedRect(o['x'], o['y'], o['w'], o['h']) for o in document.get('obstacles', [])),
    )

    fixed_end = document.get('fixed_end', False)
    waypoints = tuple(Waypoint(w['x'], w['y'], w.get('reward', 0.0)) for w in document['waypoints'])
    if fixed_end and len(waypoints) < 2:
        raise ScenarioValidationError(["waypoints: a fixed end needs at least two waypoints"])

    c = document['constraints']
    constraints = ConstraintSet(
        v_max=c['v_max'],
        v_min=c.get('v_min', 0.0),
        t_max=c.get('t_max'),
        d_max=c.get('d_max'),
        omega_max=c.get('omega_max'),
        accel_max=c.get('accel_max'),
    )

    model = RobotModel(document.get('model', RobotModel.DIFFERENTIAL_DRIVE.value))
    grid = document.get('grid', {})

    scenario = Scenario(
        environment=environment,
        waypoints=waypoints,
        constraints=constraints,
        fixed_end=fixed_end,
        model=model,
        model_params=_model_params(model, document.get('model_params', {})),
        grid_resolution=grid.get('resolution', DEFAULT_GRID_RESOLUTION),
        inflation_radius=grid.get('inflation', 0.0),
        initial_heading=document.get('initial_heading'),
        solver=dict(document.get('solver', {})),
        weights=dict(document.get('weights', {})),
        timing=dict(document.get('timing', {})),
    )

    if check:
        findings = validate(scenario)
        if findings:
            raise ScenarioValidationError(findings)
    return scenario

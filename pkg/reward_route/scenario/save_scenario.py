import json
import hashlib
from typeguard import typechecked

from .constraint_set import DiffDriveParams, QuadrupedParams
from .scenario import Scenario


def _scenario_document(scenario: Scenario) -> dict:
    env = scenario.environment
    c = scenario.constraints
    constraints = {'v_max': c.v_max, 'v_min': c.v_min}
    for name in ['t_max', 'd_max', 'omega_max', 'accel_max']:
        if getattr(c, name) is not None:
            constraints[name] = getattr(c, name)

    document = {
        'bounds': {'x_min': env.x_min, 'x_max': env.x_max, 'y_min': env.y_min, 'y_max': env.y_max},
        'obstacles': [{'x': o.x, 'y': o.y, 'w': o.width, 'h': o.height} for o in env.obstacles],
        'waypoints': [{'x': w.x, 'y': w.y, 'reward': w.reward} for w in scenario.waypoints],
        'fixed_end': scenario.fixed_end,
        'constraints': constraints,
        'model': scenario.model.value,
        'grid': {'resolution': scenario.grid_resolution, 'inflation': scenario.inflation_radius},
    }

    if isinstance(scenario.model_params, DiffDriveParams):
        document['model_params'] = {'r': scenario.model_params.wheel_radius, 'd_v': scenario.model_params.track_width}
    elif isinstance(scenario.model_params, QuadrupedParams):
        document['model_params'] = {'standard_body_twist': scenario.model_params.standard_body_twist}

    if scenario.initial_heading is not None:
        document['initial_heading'] = scenario.initial_heading
    for name in ['solver', 'weights', 'timing']:
        if getattr(scenario, name):
            document[name] = dict(getattr(scenario, name))
    return document


@typechecked()
def save_scenario(scenario: Scenario) -> str:
    """
    Renders the scenario as a canonical document, `load_scenario(save_scenario(s))` reproduces every field.
    """
    return json.dumps(_scenario_document(scenario), indent=2, sort_keys=True) + "\n"


@typechecked()
def scenario_digest(scenario: Scenario) -> str:
    return hashlib.sha256(save_scenario(scenario).encode("utf-8")).hexdigest()

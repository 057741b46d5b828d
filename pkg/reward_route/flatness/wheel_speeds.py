import numpy as np
from typing import Tuple, Union
from typeguard import typechecked

from reward_route.scenario import DiffDriveParams

Value = Union[float, np.ndarray]


@typechecked()
def wheel_speeds(v: Value, omega: Value, params: DiffDriveParams) -> Tuple[Value, Value]:
    """
    :return: Returns the (left, right) wheel angular speeds for body speed `v` and yaw rate `omega`.
    """
    r, d = params.wheel_radius, params.track_width
    return (2 * v - omega * d) / (2 * r), (2 * v + omega * d) / (2 * r)


@typechecked()
def twist_from_wheel_speeds(phi_dot_left: Value, phi_dot_right: Value, params: DiffDriveParams) -> Tuple[Value, Value]:
    """
    :return: Returns the body speed and yaw rate (v, omega) for the given wheel angular speeds.
    """
    r, d = params.wheel_radius, params.track_width
    return r / 2 * (phi_dot_right + phi_dot_left), r / d * (phi_dot_right - phi_dot_left)

import numpy as np
from typing import Optional
from typeguard import typechecked

from reward_route.errors import DegenerateVelocityError
from reward_route.scenario import DiffDriveParams

from .flat_trace import FlatTrace
from .state_input_trace import StateInputTrace
from .wheel_speeds import wheel_speeds

DIFFDRIVE_INPUTS = ('v', 'omega')
MIN_TRANSLATION_SPEED = 1e-9


@typechecked()
def diffdrive_forward(flat: FlatTrace, params: Optional[DiffDriveParams] = None) -> StateInputTrace:
    """
    Maps flat outputs to the states and inputs of the differential drive (forward motion only).

    x3 = atan2(y2', y1') unwrapped over time, u1 = |y'|, u2 = (y1' y2'' - y1'' y2') / |y'|^2 and
    u1' = (y1' y1'' + y2' y2'') / |y'|.

    :param flat: The flat trace; the robot must translate at every sample.
    :param params: Wheel radius and track width; when given the wheel speeds are added.
    :return: Returns the state and input trace.
    """
    yd, ydd = flat.y_dot, flat.y_ddot
    speed = flat.speed
    if np.any(speed < MIN_TRANSLATION_SPEED):
        raise DegenerateVelocityError("Heading and yaw rate are undefined where the robot does not translate.")

    x3 = np.unwrap(np.arctan2(yd[:, 1], yd[:, 0]))
    u1 = speed
    u2 = (yd[:, 0] * ydd[:, 1] - ydd[:, 0] * yd[:, 1]) / speed ** 2
    u1_dot = (yd[:, 0] * ydd[:, 0] + yd[:, 1] * ydd[:, 1]) / speed

    wheels = None
    if params is not None:
        wheels = np.column_stack(wheel_speeds(u1, u2, params))

    return StateInputTrace(
        t=flat.t,
        states=np.column_stack([flat.y, x3]),
        inputs=np.column_stack([u1, u2]),
        input_names=DIFFDRIVE_INPUTS,
        u1_dot=u1_dot,
        wheel_speeds=wheels,
    )

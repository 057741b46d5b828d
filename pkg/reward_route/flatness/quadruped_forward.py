import numpy as np
from typeguard import typechecked

from .flat_trace import FlatTrace
from .state_input_trace import StateInputTrace

QUADRUPED_INPUTS = ('vx_body', 'vy_body', 'omega')


@typechecked()
def quadruped_forward(flat: FlatTrace, standard_body_twist: bool = False) -> StateInputTrace:
    """
    Maps the flat output (x1, x2, theta) of the kinematic quadruped model to its body velocity inputs.

    By default the inputs are R(theta) q' + theta' M(theta) q with q = (x1, x2, theta),
    R = [[c, -s, 0], [s, c, 0], [0, 0, 1]] and M = [[-s, -c, 0], [c, -s, 0], [0, 0, 0]], i.e. the time
    derivative of R(theta) q. `standard_body_twist` uses the body-frame velocity R(theta)^T (x1', x2')
    and theta' instead.
    """
    assert flat.theta is not None and flat.theta_dot is not None, "The quadruped map needs heading and yaw rate."
    c, s = np.cos(flat.theta), np.sin(flat.theta)
    x1, x2 = flat.y[:, 0], flat.y[:, 1]
    x1_dot, x2_dot = flat.y_dot[:, 0], flat.y_dot[:, 1]
    w = flat.theta_dot

    if standard_body_twist:
        forward = c * x1_dot + s * x2_dot
        lateral = -s * x1_dot + c * x2_dot
    else:
        forward = c * x1_dot - s * x2_dot + w * (-s * x1 - c * x2)
        lateral = s * x1_dot + c * x2_dot + w * (c * x1 - s * x2)

    return StateInputTrace(
        t=flat.t,
        states=np.column_stack([x1, x2, flat.theta]),
        inputs=np.column_stack([forward, lateral, w]),
        input_names=QUADRUPED_INPUTS,
    )

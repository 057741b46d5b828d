import numpy as np
from typeguard import typechecked

from reward_route.errors import ZeroInputError

from .flat_trace import FlatTrace
from .state_input_trace import StateInputTrace


@typechecked()
def diffdrive_inverse(trace: StateInputTrace, printed_sign: bool = False) -> FlatTrace:
    """
    Maps differential-drive states and inputs back to the flat outputs:
    y = (x1, x2), y' = u1 (cos x3, sin x3) and
    y'' = (u1' cos x3 - u1 u2 sin x3, u1' sin x3 + u1 u2 cos x3).

    :param trace: States, inputs and u1'.
    :param printed_sign: Uses `- u1 u2 cos x3` in the second acceleration component, which does not
                         invert `diffdrive_forward`.
    """
    assert trace.u1_dot is not None, "The inverse map needs the derivative of u1."
    u1, u2 = trace.inputs[:, 0], trace.inputs[:, 1]
    if np.any(u1 == 0):
        raise ZeroInputError("The inverse map is undefined where the speed input is zero.")

    c, s = np.cos(trace.states[:, 2]), np.sin(trace.states[:, 2])
    turn = u1 * u2
    sign = -1.0 if printed_sign else 1.0
    return FlatTrace(
        t=trace.t,
        y=trace.states[:, :2].copy(),
        y_dot=np.column_stack([u1 * c, u1 * s]),
        y_ddot=np.column_stack([trace.u1_dot * c - turn * s, trace.u1_dot * s + sign * turn * c]),
        theta=trace.states[:, 2].copy(),
        theta_dot=u2.copy(),
    )

import numpy as np
from typeguard import typechecked

from reward_route.errors import ZeroSpeedSampleError
from reward_route.trajectory import Trajectory

from .flat_trace import FlatTrace


@typechecked()
def flat_trace_from_trajectory(traj: Trajectory) -> FlatTrace:
    """
    Flat outputs of a planar trajectory, taken analytically from heading, curvature and speed: the
    velocity is v along the tangent, the acceleration a_t along the tangent plus v^2 kappa along the normal.
    """
    assert len(traj) >= 2, "A flat trace needs at least two trajectory samples."
    if np.any(traj.v <= 0):
        raise ZeroSpeedSampleError("The trajectory stands still at some samples.")

    tangent = np.column_stack([np.cos(traj.theta), np.sin(traj.theta)])
    normal = np.column_stack([-np.sin(traj.theta), np.cos(traj.theta)])
    v = traj.v[:, None]

    return FlatTrace(
        t=traj.t,
        y=traj.positions,
        y_dot=v * tangent,
        y_ddot=traj.a_tan[:, None] * tangent + (v * v * traj.kappa[:, None]) * normal,
        theta=traj.theta,
        theta_dot=traj.v * traj.kappa,
    )

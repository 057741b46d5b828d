import math
import numpy as np
from dataclasses import dataclass
from typing import Optional
from typeguard import typechecked

from reward_route.errors import InfeasibleSpeedBandError
from reward_route.scenario import ConstraintSet, DEFAULT_GRID_RESOLUTION

from .piecewise_clothoid import PiecewiseClothoid
from .trajectory import Trajectory


@dataclass(frozen=True)
class TimingOptions():
    cruise_factor: float = 0.8
    min_speed_factor: float = 0.9

    def __post_init__(self):
        assert self.cruise_factor > 0, f"The cruise factor must be positive (got {self.cruise_factor})."
        assert 0 < self.min_speed_factor < 1, f"The final-time reduction factor must be in (0, 1) (got {self.min_speed_factor})."


def default_sample_count(length: float, resolution: float) -> int:
    return max(100, int(math.ceil(length / resolution)))


@typechecked()
def parameterize_time(
        path: PiecewiseClothoid,
        constraints: ConstraintSet,
        sample_count: Optional[int] = None,
        resolution: float = DEFAULT_GRID_RESOLUTION,
        options: TimingOptions = TimingOptions(),
) -> Trajectory:
    """
    Allocates time stamps along the path at a constant cruise speed.

    The cruise speed is the least aggressive one that meets the time window (length / t_max), or a fixed
    fraction of v_max without time window. Below v_min the final time is shortened step by step and the
    speed ends at v_min exactly; above v_max the speed is clamped, which may later show up as a time
    window violation.

    :param path: The path.
    :param constraints: The speed band and the time window.
    :param sample_count: The number of samples, uniform in arc length (default max(100, length / resolution)).
    :param resolution: The spacing used for the default sample count.
    :param options: Cruise factor and final-time reduction factor.
    :return: Returns the trajectory.
    """
    if constraints.v_min > constraints.v_max:
        raise InfeasibleSpeedBandError(f"Minimum speed {constraints.v_min} exceeds maximum speed {constraints.v_max}.")
    assert sample_count is None or sample_count >= 2, f"At least two samples are needed (got {sample_count})."

    L = path.total_length
    if constraints.t_max is not None:
        t_f = constraints.t_max
    else:
        t_f = L / (options.cruise_factor * constraints.v_max)

    if L / t_f < constraints.v_min:
        while L / t_f < constraints.v_min:
            t_f *= options.min_speed_factor
        t_f = L / constraints.v_min
    if L / t_f > constraints.v_max:
        t_f = L / constraints.v_max
    v = L / t_f

    n = sample_count if sample_count is not None else default_sample_count(L, resolution)
    s = np.linspace(0.0, L, n)
    x, y, theta, kappa = path.evaluate(s)
    return Trajectory(
        t=s / v,
        x=x,
        y=y,
        theta=theta,
        kappa=kappa,
        v=np.full(n, v),
        a_tan=np.zeros(n),
        a_lat=v * v * np.abs(kappa),
        s=s,
        t_f=t_f,
        total_length=L,
        cruise_speed=v,
    )

import numpy as np
from typing import Sequence, Union
from typeguard import typechecked

Series = Union[Sequence[float], np.ndarray]


@typechecked()
def violation_input(times: Series, values: Series, u_bar: float) -> float:
    """
    Normalized exceedance of a bounded channel: the integral of max(|u| - u_bar, 0) over time (trapezoidal)
    divided by t_f u_bar, where t_f is the sampled duration.

    :param times: Strictly increasing sample times.
    :param values: Channel values at the sample times.
    :param u_bar: The bound, positive.
    """
    times = np.asarray(times, dtype=np.float64)
    values = np.asarray(values, dtype=np.float64)
    assert u_bar > 0, f"The bound must be positive (got {u_bar})."
    assert times.shape == values.shape and len(times) >= 2, "Need at least two samples with one value each."
    t_f = times[-1] - times[0]
    assert t_f > 0, "The sampled duration must be positive."

    exceedance = np.maximum(np.abs(values) - u_bar, 0.0)
    integral = float(np.sum(np.diff(times) * (exceedance[1:] + exceedance[:-1]) / 2))
    return integral / (t_f * u_bar)

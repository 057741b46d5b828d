from typing import Optional
from typeguard import typechecked


@typechecked()
def violation_time(t_f: float, t_max: Optional[float]) -> float:
    """
    Relative excess of the final time over the mission time window, 0 without a window.
    """
    if t_max is None:
        return 0.0
    assert t_max > 0, f"The time window must be positive (got {t_max})."
    return max(0.0, (t_f - t_max) / t_max)

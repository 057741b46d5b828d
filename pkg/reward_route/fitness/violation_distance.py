from typing import Optional
from typeguard import typechecked


@typechecked()
def violation_distance(d: float, d_max: Optional[float]) -> float:
    """
    Relative excess of the travelled distance over the distance bound, 0 without a bound.
    """
    if d_max is None:
        return 0.0
    assert d_max > 0, f"The distance bound must be positive (got {d_max})."
    return max(0.0, (d - d_max) / d_max)

from typing import Tuple
from typeguard import typechecked

from .piecewise_clothoid import PiecewiseClothoid


@typechecked()
def sample(path: PiecewiseClothoid, s: float) -> Tuple[Tuple[float, float], float, float]:
    """
    Pose at arc length `s` along the path.

    :return: Returns ((x, y), heading, curvature).
    """
    total = path.total_length
    if not -1e-12 * total <= s <= total * (1 + 1e-12):
        raise ValueError(f"Arc length {s} is outside the path [0, {total}].")
    x, y, theta, kappa = path.evaluate([s])
    return (float(x[0]), float(y[0])), float(theta[0]), float(kappa[0])

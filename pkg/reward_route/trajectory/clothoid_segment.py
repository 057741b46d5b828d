import numpy as np
from dataclasses import dataclass
from typing import Tuple

from .fresnel import phase_integrals


@dataclass(frozen=True)
class ClothoidSegment():
    """
    An Euler spiral piece: curvature kappa0 + kappa_rate * s for 0 <= s <= length.
    """
    x0: float
    y0: float
    theta0: float
    kappa0: float
    kappa_rate: float
    length: float

    def __post_init__(self):
        assert self.length > 0, f"A clothoid segment needs a positive length (got {self.length})."

    @property
    def start_pose(self) -> Tuple[float, float, float]:
        return (self.x0, self.y0, self.theta0)

    @property
    def end_heading(self) -> float:
        return self.heading(self.length)

    @property
    def end_pose(self) -> Tuple[float, float, float]:
        x, y, theta, _ = self.evaluate(np.array([self.length]))
        return (float(x[0]), float(y[0]), float(theta[0]))

    def heading(self, s):
        return self.theta0 + self.kappa0 * s + 0.5 * self.kappa_rate * s * s

    def curvature(self, s):
        return self.kappa0 + self.kappa_rate * s

    def evaluate(self, s: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        """
        Evaluates position, heading and curvature at local arc lengths `s`.
        """
        s = np.asarray(s, dtype=np.float64)
        [(X, Y)] = phase_integrals(self.kappa_rate * s * s, self.kappa0 * s, self.theta0)
        return self.x0 + s * X, self.y0 + s * Y, self.heading(s), self.curvature(s)

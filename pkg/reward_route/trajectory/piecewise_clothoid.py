import math
import numpy as np
from dataclasses import dataclass
from typing import Tuple, List

from .angles import wrap_angle
from .clothoid_segment import ClothoidSegment


@dataclass(frozen=True, eq=False)
class PiecewiseClothoid():
    """
    Clothoid segments joined with G1 continuity. `knots` are the points where segments meet and
    `knot_indices` the non-decreasing indices of the source polyline points they belong to; a knot placed
    on the chord between two polyline points carries the index of the nearer one.
    """
    segments: Tuple[ClothoidSegment, ...]
    knots: np.ndarray
    knot_indices: Tuple[int, ...]

    def __post_init__(self):
        assert len(self.segments) >= 1, "A piecewise clothoid needs at least one segment."
        assert len(self.knots) == len(self.segments) + 1, "Every segment needs a knot at both ends."
        object.__setattr__(self, "_offsets", np.concatenate([[0.0], np.cumsum([s.length for s in self.segments])]))

    @property
    def offsets(self) -> np.ndarray:
        return self._offsets

    @property
    def total_length(self) -> float:
        return float(self._offsets[-1])

    def segment_index(self, s: np.ndarray) -> np.ndarray:
        return np.clip(np.searchsorted(self._offsets, s, side='right') - 1, 0, len(self.segments) - 1)

    def evaluate(self, s) -> Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        """
        Evaluates position, heading and curvature at path arc lengths `s` (clipped to the path).
        """
        s = np.clip(np.asarray(s, dtype=np.float64), 0.0, self.total_length)
        index = self.segment_index(s)
        x, y, theta, kappa = (np.empty_like(s) for _ in range(4))
        for i in np.unique(index):
            mask = index == i
            x[mask], y[mask], theta[mask], kappa[mask] = self.segments[i].evaluate(s[mask] - self._offsets[i])
        return x, y, theta, kappa

    def joint_residuals(self) -> List[Tuple[float, float]]:
        """
        Position and heading gap (heading modulo 2 pi) at every joint between consecutive segments.
        """
        residuals = []
        for a, b in zip(self.segments, self.segments[1:]):
            x, y, theta = a.end_pose
            residuals.append((math.hypot(x - b.x0, y - b.y0), abs(wrap_angle(theta - b.theta0))))
        return residuals

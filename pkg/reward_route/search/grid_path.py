import numpy as np
from dataclasses import dataclass, field
from typing import Tuple


@dataclass(frozen=True, eq=False)
class GridPath():
    """
    A piecewise linear path. `junctions` holds the point indices of the waypoints a sequence path passes through.
    """
    points: np.ndarray
    length: float
    junctions: Tuple[int, ...] = field(default_factory=tuple)

    @classmethod
    def from_points(cls, points, junctions: Tuple[int, ...] = ()) -> 'GridPath':
        points = np.asarray(points, dtype=np.float64).reshape(-1, 2)
        points.setflags(write=False)
        length = float(np.sum(np.hypot(*np.diff(points, axis=0).T))) if len(points) > 1 else 0.0
        return cls(points=points, length=length, junctions=tuple(junctions))

    def reversed(self) -> 'GridPath':
        last = len(self.points) - 1
        return GridPath.from_points(self.points[::-1].copy(), tuple(last - j for j in reversed(self.junctions)))

    def __len__(self) -> int:
        return len(self.points)

import numpy as np
import pandas as pd
from dataclasses import dataclass

TRAJECTORY_COLUMNS = ['t', 'x', 'y', 'theta', 'kappa', 'v', 'a_lat']


@dataclass(frozen=True, eq=False)
class Trajectory():
    """
    A path sampled in time. All arrays have one entry per sample; `s` is the arc length of the sample.
    """
    t: np.ndarray
    x: np.ndarray
    y: np.ndarray
    theta: np.ndarray
    kappa: np.ndarray
    v: np.ndarray
    a_tan: np.ndarray
    a_lat: np.ndarray
    s: np.ndarray
    t_f: float
    total_length: float
    cruise_speed: float

    @classmethod
    def stationary(cls, x: float, y: float, theta: float = 0.0) -> 'Trajectory':
        """
        The trajectory of a sequence that never leaves its start: one sample, zero duration.
        """
        zero = np.zeros(1)
        return cls(
            t=zero, x=np.full(1, x), y=np.full(1, y), theta=np.full(1, theta), kappa=zero, v=zero,
            a_tan=zero, a_lat=zero, s=zero, t_f=0.0, total_length=0.0, cruise_speed=0.0,
        )

    @property
    def positions(self) -> np.ndarray:
        return np.column_stack([self.x, self.y])

    def __len__(self) -> int:
        return len(self.t)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({c: getattr(self, c) for c in TRAJECTORY_COLUMNS}, columns=TRAJECTORY_COLUMNS)

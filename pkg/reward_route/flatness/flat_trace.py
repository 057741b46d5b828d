import numpy as np
from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True, eq=False)
class FlatTrace():
    """
    Flat outputs and their first two time derivatives, one row per sample. `theta` and `theta_dot` carry
    the heading for models whose flat output includes it.
    """
    t: np.ndarray
    y: np.ndarray
    y_dot: np.ndarray
    y_ddot: np.ndarray
    theta: Optional[np.ndarray] = None
    theta_dot: Optional[np.ndarray] = None

    def __post_init__(self):
        n = len(self.t)
        for name in ['y', 'y_dot', 'y_ddot']:
            assert getattr(self, name).shape == (n, 2), f"'{name}' must have shape ({n}, 2)."
        if n > 1:
            assert np.all(np.diff(self.t) > 0), "Sample times must be strictly increasing."

    @property
    def speed(self) -> np.ndarray:
        return np.hypot(self.y_dot[:, 0], self.y_dot[:, 1])

    def __len__(self) -> int:
        return len(self.t)

import numpy as np
import pandas as pd
from dataclasses import dataclass
from typing import Optional, Tuple


@dataclass(frozen=True, eq=False)
class StateInputTrace():
    """
    States (x1, x2, x3) and inputs of a robot model along a trace. For the differential drive the inputs
    are (v, omega) with the derivative of v in `u1_dot` and optional wheel speeds (left, right); for the
    quadruped they are the body velocities (forward, lateral, yaw rate).
    """
    t: np.ndarray
    states: np.ndarray
    inputs: np.ndarray
    input_names: Tuple[str, ...]
    u1_dot: Optional[np.ndarray] = None
    wheel_speeds: Optional[np.ndarray] = None

    def __post_init__(self):
        n = len(self.t)
        assert self.states.shape == (n, 3), f"States must have shape ({n}, 3)."
        assert self.inputs.shape == (n, len(self.input_names)), "One input column per input name is needed."

    def input(self, name: str) -> np.ndarray:
        return self.inputs[:, self.input_names.index(name)]

    def __len__(self) -> int:
        return len(self.t)

    def to_frame(self) -> pd.DataFrame:
        columns = {'t': self.t, 'x1': self.states[:, 0], 'x2': self.states[:, 1], 'x3': self.states[:, 2]}
        for k in range(self.inputs.shape[1]):
            columns[f"u{k + 1}"] = self.inputs[:, k]
        if self.u1_dot is not None:
            columns['u1_dot'] = self.u1_dot
        if self.wheel_speeds is not None:
            columns['wL'] = self.wheel_speeds[:, 0]
            columns['wR'] = self.wheel_speeds[:, 1]
        return pd.DataFrame(columns)

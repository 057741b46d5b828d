import numpy as np


def diffdrive_dynamics(x: np.ndarray, u: np.ndarray) -> np.ndarray:
    """
    x' = (u1 cos x3, u1 sin x3, u2), row-wise for stacked states and inputs.
    """
    x = np.atleast_2d(x)
    u = np.atleast_2d(u)
    return np.column_stack([u[:, 0] * np.cos(x[:, 2]), u[:, 0] * np.sin(x[:, 2]), u[:, 1]])

import enum
import numpy as np
from dataclasses import dataclass, field
from typing import Tuple, Optional, Union, Dict, Any

from .environment import Environment
from .waypoint import Waypoint
from .constraint_set import ConstraintSet, DiffDriveParams, QuadrupedParams

DEFAULT_GRID_RESOLUTION = 0.05


class RobotModel(enum.Enum):
    DIFFERENTIAL_DRIVE = "diffdrive"
    QUADRUPED = "quadruped"


@dataclass(frozen=True)
class Scenario():
    """
    The planning problem: environment, waypoints, constraints and robot model.

    Waypoint 0 is the fixed start. The last waypoint is a mandatory terminal only when `fixed_end` is set,
    otherwise it is an ordinary intermediate waypoint.
    """
    environment: Environment
    waypoints: Tuple[Waypoint, ...]
    constraints: ConstraintSet
    fixed_end: bool = False
    model: RobotModel = RobotModel.DIFFERENTIAL_DRIVE
    model_params: Optional[Union[DiffDriveParams, QuadrupedParams]] = None
    grid_resolution: float = DEFAULT_GRID_RESOLUTION
    inflation_radius: float = 0.0
    initial_heading: Optional[float] = None
    solver: Dict[str, Any] = field(default_factory=dict)
    weights: Dict[str, float] = field(default_factory=dict)
    timing: Dict[str, float] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "waypoints", tuple(self.waypoints))
        assert len(self.waypoints) >= 1, "A scenario needs at least the start waypoint."
        if self.fixed_end:
            assert len(self.waypoints) >= 2, "A scenario with a fixed end needs at least two waypoints."
        assert self.grid_resolution > 0, f"The grid resolution must be positive (got {self.grid_resolution})."
        assert self.inflation_radius >= 0, f"The inflation radius must not be negative (got {self.inflation_radius})."

    @property
    def start_index(self) -> int:
        return 0

    @property
    def end_index(self) -> Optional[int]:
        return len(self.waypoints) - 1 if self.fixed_end else None

    @property
    def fixed_indices(self) -> Tuple[int, ...]:
        return (0, len(self.waypoints) - 1) if self.fixed_end else (0,)

    @property
    def intermediate_indices(self) -> Tuple[int, ...]:
        last = len(self.waypoints) - 1 if self.fixed_end else len(self.waypoints)
        return tuple(range(1, last))

    @property
    def positions(self) -> np.ndarray:
        return np.array([w.position for w in self.waypoints], dtype=np.float64).reshape(-1, 2)

    @property
    def max_reward(self) -> float:
        return float(sum(self.waypoints[i].reward for i in self.intermediate_indices))

    @property
    def reward_floor(self) -> float:
        """
        The clamp for the collected reward when a sequence collects nothing: half of the smallest positive
        intermediate reward (0 when there is none).
        """
        rewards = [self.waypoints[i].reward for i in self.intermediate_indices if self.waypoints[i].reward > 0]
        return min(rewards) / 2 if rewards else 0.0

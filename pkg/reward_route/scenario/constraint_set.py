from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class ConstraintSet():
    v_max: float
    v_min: float = 0.0
    t_max: Optional[float] = None
    d_max: Optional[float] = None
    omega_max: Optional[float] = None
    accel_max: Optional[float] = None

    def findings(self):
        """
        Lists every malformed bound. An empty list means the constraint set is usable.
        """
        findings = []
        for name in ['t_max', 'd_max', 'v_max', 'omega_max', 'accel_max']:
            value = getattr(self, name)
            if value is not None and not value > 0:
                findings.append(f"constraints: {name} must be positive (got {value})")
        if self.v_min < 0:
            findings.append(f"constraints: v_min must not be negative (got {self.v_min})")
        if self.v_min > self.v_max:
            findings.append(f"constraints: v_min ({self.v_min}) exceeds v_max ({self.v_max})")
        return findings


@dataclass(frozen=True)
class DiffDriveParams():
    wheel_radius: float
    track_width: float

    def __post_init__(self):
        assert self.wheel_radius > 0, f"The wheel radius must be positive (got {self.wheel_radius})."
        assert self.track_width > 0, f"The track width must be positive (got {self.track_width})."


@dataclass(frozen=True)
class QuadrupedParams():
    standard_body_twist: bool = False

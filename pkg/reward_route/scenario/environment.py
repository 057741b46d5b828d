from dataclasses import dataclass, field
from typing import Tuple


@dataclass(frozen=True)
class AxisAlignedRect():
    x: float
    y: float
    width: float
    height: float

    @property
    def x_max(self) -> float:
        return self.x + self.width

    @property
    def y_max(self) -> float:
        return self.y + self.height

    def contains(self, px: float, py: float) -> bool:
        return self.x <= px <= self.x_max and self.y <= py <= self.y_max


@dataclass(frozen=True)
class Environment():
    x_min: float
    x_max: float
    y_min: float
    y_max: float
    obstacles: Tuple[AxisAlignedRect, ...] = field(default_factory=tuple)

    def __post_init__(self):
        assert self.x_min < self.x_max, f"Environment needs x_min < x_max (got {self.x_min} and {self.x_max})."
        assert self.y_min < self.y_max, f"Environment needs y_min < y_max (got {self.y_min} and {self.y_max})."
        object.__setattr__(self, "obstacles", tuple(self.obstacles))

    @property
    def width(self) -> float:
        return self.x_max - self.x_min

    @property
    def height(self) -> float:
        return self.y_max - self.y_min

    def in_bounds(self, px: float, py: float) -> bool:
        return self.x_min <= px <= self.x_max and self.y_min <= py <= self.y_max

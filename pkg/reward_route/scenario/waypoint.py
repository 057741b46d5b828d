from dataclasses import dataclass
from typing import Tuple


@dataclass(frozen=True)
class Waypoint():
    x: float
    y: float
    reward: float = 0.0

    @property
    def position(self) -> Tuple[float, float]:
        return (self.x, self.y)

import numpy as np
from typing import Set
from typeguard import typechecked

from reward_route.scenario import OccupancyGrid

from .clothoid_segment import ClothoidSegment
from .piecewise_clothoid import PiecewiseClothoid


def arc_samples(length: float, step: float) -> np.ndarray:
    s = np.arange(0.0, length, step)
    return np.append(s, length)


def segment_free(segment: ClothoidSegment, grid: OccupancyGrid) -> bool:
    x, y, _, _ = segment.evaluate(arc_samples(segment.length, grid.resolution / 2))
    return bool(np.all(grid.is_free_many(np.column_stack([x, y]))))


def blocked_segments(path: PiecewiseClothoid, grid: OccupancyGrid) -> Set[int]:
    """
    Indices of the segments holding a blocked sample of the path, sampled at half the grid resolution.
    """
    s = arc_samples(path.total_length, grid.resolution / 2)
    x, y, _, _ = path.evaluate(s)
    blocked = ~grid.is_free_many(np.column_stack([x, y]))
    return {int(i) for i in path.segment_index(s[blocked])}


@typechecked()
def collision_free(path: PiecewiseClothoid, grid: OccupancyGrid) -> bool:
    """
    True when every sample of the path, taken at half the grid resolution, lies in a free cell.
    """
    return len(blocked_segments(path, grid)) == 0

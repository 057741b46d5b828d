import math
import numpy as np
from typing import Optional
from typeguard import typechecked

from reward_route.search import GridPath

from .angles import bisector_heading


@typechecked()
def assign_headings(polyline: GridPath, initial_heading: Optional[float] = None) -> np.ndarray:
    """
    Tangent directions for the polyline points: the bisector of the incoming and outgoing bearing at
    interior points, the adjacent bearing at both ends (or `initial_heading` at the start, when pinned).
    """
    points = polyline.points
    assert len(points) >= 2, "Headings need a polyline with at least two points."

    steps = np.diff(points, axis=0)
    headings = np.empty(len(points))
    headings[0] = math.atan2(steps[0][1], steps[0][0]) if initial_heading is None else initial_heading
    headings[-1] = math.atan2(steps[-1][1], steps[-1][0])
    for i in range(1, len(points) - 1):
        headings[i] = bisector_heading(steps[i - 1], steps[i])
    return headings

from typing import Optional, Tuple
from typeguard import typechecked

from reward_route.errors import NonConvergenceError
from reward_route.search import GridPath

from .assign_headings import assign_headings
from .fit_g1 import fit_g1
from .piecewise_clothoid import PiecewiseClothoid


@typechecked()
def build_path(
        polyline: GridPath,
        initial_heading: Optional[float] = None,
        knot_indices: Optional[Tuple[int, ...]] = None,
) -> PiecewiseClothoid:
    """
    Interpolates every point of the polyline with one clothoid per consecutive pair. Each segment starts
    with the end heading of its predecessor, so headings stay continuous without wrapping.

    :param polyline: The points to interpolate, at least two and no consecutive duplicates.
    :param initial_heading: Pins the start tangent.
    :param knot_indices: Indices of the points in a source polyline (defaults to 0..n-1).
    """
    points = polyline.points
    headings = assign_headings(polyline, initial_heading)

    segments = []
    theta = float(headings[0])
    for i in range(len(points) - 1):
        try:
            segment = fit_g1(points[i], theta, points[i + 1], float(headings[i + 1]))
        except NonConvergenceError as e:
            raise NonConvergenceError("Clothoid fit did not converge", residual=e.residual, segment_index=i) from e
        segments.append(segment)
        theta = segment.end_heading

    if knot_indices is None:
        knot_indices = tuple(range(len(points)))
    assert len(knot_indices) == len(points), "One knot index per polyline point is needed."
    return PiecewiseClothoid(segments=tuple(segments), knots=points.copy(), knot_indices=tuple(knot_indices))

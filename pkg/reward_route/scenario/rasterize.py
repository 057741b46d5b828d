import numpy as np
from typeguard import typechecked

from .environment import Environment
from .occupancy_grid import OccupancyGrid

# absorbs float noise in extent / resolution, e.g. 10 / 0.05
_EXTENT_TOLERANCE = 1e-9


def _cell_count(extent: float, resolution: float) -> int:
    return max(1, int(np.ceil(extent / resolution - _EXTENT_TOLERANCE)))


@typechecked()
def rasterize(env: Environment, resolution: float, inflation_radius: float = 0.0) -> OccupancyGrid:
    """
    Rasterizes the environment. A cell is occupied when its center lies outside the bounds or within
    `inflation_radius` (Euclidean) of any obstacle rectangle.

    :param env: The environment with its obstacles.
    :param resolution: The cell edge length in meters.
    :param inflation_radius: The obstacle inflation in meters (robot radius).
    :return: Returns the occupancy grid anchored at (x_min, y_min).
    """
    assert resolution > 0, f"The resolution must be positive (got {resolution})."
    assert inflation_radius >= 0, f"The inflation radius must not be negative (got {inflation_radius})."

    width = _cell_count(env.width, resolution)
    height = _cell_count(env.height, resolution)
    cx = env.x_min + (np.arange(width) + 0.5) * resolution
    cy = env.y_min + (np.arange(height) + 0.5) * resolution
    px, py = np.meshgrid(cx, cy)

    occupied = (px > env.x_max) | (py > env.y_max)
    for o in env.obstacles:
        dx = np.maximum(np.maximum(o.x - px, px - o.x_max), 0.0)
        dy = np.maximum(np.maximum(o.y - py, py - o.y_max), 0.0)
        occupied |= np.hypot(dx, dy) <= inflation_radius

    return OccupancyGrid(
        origin=(env.x_min, env.y_min),
        resolution=float(resolution),
        width=width,
        height=height,
        cells=occupied,
    )

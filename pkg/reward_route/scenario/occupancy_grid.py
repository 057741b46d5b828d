import numpy as np
from dataclasses import dataclass
from typing import Tuple, Optional


@dataclass(frozen=True, eq=False)
class OccupancyGrid():
    """
    Rasterized free space. `cells[iy, ix]` is True for an occupied cell, the cell (ix, iy) covers
    [origin + (ix, iy) * resolution, origin + (ix + 1, iy + 1) * resolution).
    """
    origin: Tuple[float, float]
    resolution: float
    width: int
    height: int
    cells: np.ndarray

    def __post_init__(self):
        assert self.resolution > 0, f"The resolution must be positive (got {self.resolution})."
        assert self.cells.shape == (self.height, self.width), \
            f"Cell raster has shape {self.cells.shape}, expected {(self.height, self.width)}."
        self.cells.setflags(write=False)

    def cell_of(self, px: float, py: float) -> Optional[Tuple[int, int]]:
        ix = int(np.floor((px - self.origin[0]) / self.resolution))
        iy = int(np.floor((py - self.origin[1]) / self.resolution))
        if 0 <= ix < self.width and 0 <= iy < self.height:
            return ix, iy
        return None

    def cell_center(self, ix: int, iy: int) -> Tuple[float, float]:
        return (
            self.origin[0] + (ix + 0.5) * self.resolution,
            self.origin[1] + (iy + 0.5) * self.resolution,
        )

    def is_occupied_cell(self, ix: int, iy: int) -> bool:
        if 0 <= ix < self.width and 0 <= iy < self.height:
            return bool(self.cells[iy, ix])
        return True

    def clearance(self, px: float, py: float, radius: float) -> float:
        """
        Distance from a point to the nearest occupied cell or to the edge of the grid, capped at `radius`.
        Every point closer than the clearance lies in a free cell.
        """
        x0, y0 = self.origin
        r = self.resolution
        d = min(radius, px - x0, x0 + self.width * r - px, py - y0, y0 + self.height * r - py)
        if d <= 0:
            return 0.0

        lo_x = max(0, int(np.floor((px - d - x0) / r)))
        hi_x = min(self.width, int(np.floor((px + d - x0) / r)) + 1)
        lo_y = max(0, int(np.floor((py - d - y0) / r)))
        hi_y = min(self.height, int(np.floor((py + d - y0) / r)) + 1)
        iy, ix = np.nonzero(self.cells[lo_y:hi_y, lo_x:hi_x])
        if len(ix) == 0:
            return float(d)

        left = x0 + (ix + lo_x) * r
        bottom = y0 + (iy + lo_y) * r
        dx = np.maximum(np.maximum(left - px, px - (left + r)), 0.0)
        dy = np.maximum(np.maximum(bottom - py, py - (bottom + r)), 0.0)
        return float(min(d, np.min(np.hypot(dx, dy))))

    def is_free_many(self, points: np.ndarray) -> np.ndarray:
        points = np.asarray(points, dtype=np.float64).reshape(-1, 2)
        ix = np.floor((points[:, 0] - self.origin[0]) / self.resolution)
        iy = np.floor((points[:, 1] - self.origin[1]) / self.resolution)
        inside = (ix >= 0) & (ix < self.width) & (iy >= 0) & (iy < self.height)
        free = np.zeros(len(points), dtype=bool)
        free[inside] = ~self.cells[iy[inside].astype(int), ix[inside].astype(int)]
        return free

import numpy as np
from typing import Sequence, Union
from typeguard import typechecked

from .occupancy_grid import OccupancyGrid


@typechecked()
def is_free(grid: OccupancyGrid, p: Union[Sequence[float], np.ndarray]) -> bool:
    cell = grid.cell_of(float(p[0]), float(p[1]))
    if cell is None:
        return False
    return not grid.is_occupied_cell(*cell)

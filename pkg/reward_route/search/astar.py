import heapq
import math
import numpy as np
from typing import Sequence, Union
from typeguard import typechecked

from reward_route.errors import InvalidEndpointError, NoPathError
from reward_route.scenario import OccupancyGrid

from .grid_path import GridPath

SQRT2 = math.sqrt(2.0)
_MOVES = [(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (1, -1), (-1, 1), (-1, -1)]


def _octile(dx: int, dy: int) -> float:
    dx, dy = abs(dx), abs(dy)
    return max(dx, dy) + (SQRT2 - 1.0) * min(dx, dy)


@typechecked()
def astar(
        grid: OccupancyGrid,
        start: Union[Sequence[float], np.ndarray],
        goal: Union[Sequence[float], np.ndarray],
) -> GridPath:
    """
    Shortest 8-connected grid path with octile costs. A diagonal move needs both adjacent cardinal cells to
    be free. Among equal f-scores the lower h expands first, remaining ties go to the lower cell index.

    The start and goal snap to the cells containing them; their continuous coordinates replace the first
    and last cell centers of the result.

    :param grid: The occupancy grid.
    :param start: The start point in meters.
    :param goal: The goal point in meters.
    :return: Returns the path from start to goal.
    """
    start = (float(start[0]), float(start[1]))
    goal = (float(goal[0]), float(goal[1]))
    start_cell = grid.cell_of(*start)
    goal_cell = grid.cell_of(*goal)
    for name, point, cell in [("start", start, start_cell), ("goal", goal, goal_cell)]:
        if cell is None or grid.is_occupied_cell(*cell):
            raise InvalidEndpointError(f"The {name} point {point} is not in the obstacle-free space.")

    if start_cell == goal_cell:
        return GridPath.from_points([start] if start == goal else [start, goal])

    width, height = grid.width, grid.height
    occupied = grid.cells.ravel().tolist()
    start_index = start_cell[1] * width + start_cell[0]
    goal_index = goal_cell[1] * width + goal_cell[0]
    gx, gy = goal_cell

    g_score = [math.inf] * (width * height)
    came_from = [-1] * (width * height)
    closed = [False] * (width * height)

    g_score[start_index] = 0.0
    h = _octile(start_cell[0] - gx, start_cell[1] - gy)
    open_heap = [(h, h, start_index)]

    while open_heap:
        _, _, index = heapq.heappop(open_heap)
        if closed[index]:
            continue
        closed[index] = True
        if index == goal_index:
            break

        x, y = index % width, index // width
        for dx, dy in _MOVES:
            nx, ny = x + dx, y + dy
            if not (0 <= nx < width and 0 <= ny < height):
                continue
            neighbour = ny * width + nx
            if occupied[neighbour] or closed[neighbour]:
                continue
            if dx != 0 and dy != 0:
                if occupied[y * width + nx] or occupied[ny * width + x]:
                    continue
                step = SQRT2
            else:
                step = 1.0
            tentative = g_score[index] + step
            if tentative < g_score[neighbour]:
                g_score[neighbour] = tentative
                came_from[neighbour] = index
                h = _octile(nx - gx, ny - gy)
                heapq.heappush(open_heap, (tentative + h, h, neighbour))
    else:
        raise NoPathError(f"No obstacle-free path from {start} to {goal}.")

    cells = []
    index = came_from[goal_index]
    while index != start_index:
        cells.append(grid.cell_center(index % width, index // width))
        index = came_from[index]

    return GridPath.from_points([start] + cells[::-1] + [goal])

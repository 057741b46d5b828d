import math
import numpy as np
from dataclasses import replace
from typing import Callable, List, Tuple
from typeguard import typechecked

from reward_route.errors import NonConvergenceError
from reward_route.scenario import OccupancyGrid
from reward_route.search import GridPath

from .angles import bisector_heading, wrap_angle
from .clothoid_segment import ClothoidSegment
from .collision_free import segment_free, blocked_segments
from .fit_g1 import fit_g1
from .piecewise_clothoid import PiecewiseClothoid

MAX_PASSES = 4
MAX_HALVINGS = 40
_STRAIGHT = 1e-12


def _clear_turn(fit: Callable[[float], ClothoidSegment], anchor: np.ndarray, grid: OccupancyGrid, d: float):
    # a turn shorter than the clearance of its anchor point cannot reach an occupied cell
    for _ in range(MAX_HALVINGS):
        turn = fit(d)
        if turn.length < grid.clearance(float(anchor[0]), float(anchor[1]), 2 * turn.length):
            break
        d /= 2
    return turn, d


def track_chord(
        pa: np.ndarray,
        theta_a: float,
        pb: np.ndarray,
        theta_b: float,
        grid: OccupancyGrid,
) -> Tuple[List[ClothoidSegment], List[Tuple[np.ndarray, bool]]]:
    """
    G1 path from (pa, theta_a) to (pb, theta_b) along the straight chord: a short turn onto the chord at pa,
    the chord itself and a short turn off it at pb. The turns shrink until they keep clear of occupied cells.

    :return: Returns the segments and the points where they meet, each flagged True when it lies next to `pa`.
    """
    chord = pb - pa
    ell = float(np.hypot(chord[0], chord[1]))
    u = chord / ell
    c = theta_a + wrap_angle(math.atan2(u[1], u[0]) - theta_a)

    segments, joints = [], []
    d_head = d_tail = 0.0
    if abs(c - theta_a) > _STRAIGHT:
        head, d_head = _clear_turn(lambda d: fit_g1(pa, theta_a, pa + d * u, c), pa, grid, ell / 4)
        segments.append(head)
        joints.append((pa + d_head * u, True))
    tail = None
    if abs(wrap_angle(theta_b - c)) > _STRAIGHT:
        tail, d_tail = _clear_turn(lambda d: fit_g1(pb - d * u, c, pb, theta_b), pb, grid, ell / 4)

    q = pa + d_head * u
    theta = segments[-1].end_heading if segments else c
    segments.append(ClothoidSegment(
        x0=float(q[0]), y0=float(q[1]), theta0=theta, kappa0=0.0, kappa_rate=0.0, length=ell - d_head - d_tail,
    ))
    if tail is not None:
        segments.append(tail)
        joints.append((pb - d_tail * u, False))
    return segments, joints


def _splice(segments: List[ClothoidSegment], i: int, chain: List[ClothoidSegment]):
    # later segments keep an unwrapped heading when the chain ends a full turn off
    turns = round((chain[-1].end_heading - segments[i].end_heading) / (2 * math.pi))
    segments[i:i + 1] = chain
    if turns != 0:
        for k in range(i + len(chain), len(segments)):
            segments[k] = replace(segments[k], theta0=segments[k].theta0 + 2 * math.pi * turns)


@typechecked()
def refine_collision(path: PiecewiseClothoid, polyline: GridPath, grid: OccupancyGrid) -> PiecewiseClothoid:
    """
    Replaces segments that touch an occupied cell until the whole path is free.

    A colliding segment between polyline points more than one step apart is split at the middle polyline
    point of its interval and the two halves are refit; existing knots keep their headings and the inserted
    knot gets the bisector heading of its neighbours. A colliding segment between neighbouring polyline
    points follows their straight chord instead, which is free because the polyline is, with short turns
    at both ends. Only colliding segments are replaced.

    :param path: The path to refine. Its `knot_indices` index into `polyline`.
    :param polyline: The obstacle-free grid path the knots were taken from.
    :param grid: The occupancy grid.
    :return: Returns the collision free path, or `path` itself when nothing had to change.
    """
    points = polyline.points
    segments = list(path.segments)
    knots = list(path.knot_indices)
    positions = [p for p in path.knots]
    assert len(knots) == len(segments) + 1, "The path knots must index into the polyline."

    refined = path
    changed = False
    suspects = [not segment_free(segment, grid) for segment in segments]
    for _ in range(MAX_PASSES):
        i = 0
        while i < len(segments):
            if not suspects[i]:
                i += 1
                continue

            changed = True
            a, b = knots[i], knots[i + 1]
            if b - a >= 2:
                m = (a + b) // 2
                pa, pm, pb = positions[i], points[m], positions[i + 1]
                first = fit_g1(pa, segments[i].theta0, pm, bisector_heading(pm - pa, pb - pm))
                second = fit_g1(pm, first.end_heading, pb, segments[i].end_heading)
                _splice(segments, i, [first, second])
                knots.insert(i + 1, m)
                positions.insert(i + 1, pm)
                suspects[i:i + 1] = [not segment_free(first, grid), not segment_free(second, grid)]
                continue

            chain, joints = track_chord(positions[i], segments[i].theta0, positions[i + 1], segments[i].end_heading, grid)
            _splice(segments, i, chain)
            knots[i + 1:i + 1] = [a if near_start else b for _, near_start in joints]
            positions[i + 1:i + 1] = [point for point, _ in joints]
            suspects[i:i + 1] = [False] * len(chain)
            i += len(chain)

        if changed:
            refined = PiecewiseClothoid(
                segments=tuple(segments), knots=np.array(positions), knot_indices=tuple(knots),
            )
        blocked = blocked_segments(refined, grid)
        if not blocked:
            return refined
        suspects = [k in blocked for k in range(len(segments))]

    raise NonConvergenceError(
        "Collision refinement left the path blocked",
        residual=len(blocked) / len(refined.segments),
    )

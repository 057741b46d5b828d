import math
import numpy as np
from typing import Sequence, Union
from typeguard import typechecked

from reward_route.errors import NonConvergenceError

from .angles import wrap_angle
from .clothoid_segment import ClothoidSegment
from .fresnel import phase_integrals

MAX_ITERATIONS = 100
G1_TOLERANCE = 1e-8
# residual of the angle equation, dimensionless
_ROOT_TOLERANCE = 1e-15


@typechecked()
def fit_g1(
        p0: Union[Sequence[float], np.ndarray],
        theta0: float,
        p1: Union[Sequence[float], np.ndarray],
        theta1: float,
) -> ClothoidSegment:
    """
    G1 Hermite interpolation with a single clothoid: starts at (p0, theta0) and ends at (p1, theta1).

    With phi0, phi1 the endpoint tangents relative to the chord and delta = phi1 - phi0, the clothoid is
    found from the root A of Y(2A, delta - A, phi0) = 0 (damped Newton, starting at A = 3 (phi0 + phi1));
    then L = |p1 - p0| / X(2A, delta - A, phi0), kappa0 = (delta - A) / L and kappa_rate = 2A / L^2.

    :return: Returns the segment. Its end heading equals theta1 up to a multiple of 2 pi.
    """
    x0, y0 = float(p0[0]), float(p0[1])
    dx, dy = float(p1[0]) - x0, float(p1[1]) - y0
    r = math.hypot(dx, dy)
    assert r > 0, f"Cannot fit a clothoid between identical points {tuple(p0)}."

    phi = math.atan2(dy, dx)
    phi0 = wrap_angle(theta0 - phi)
    phi1 = wrap_angle(theta1 - phi)
    delta = phi1 - phi0

    def residual(A):
        [(X0, Y0), (X1, _), (X2, _)] = phase_integrals(2 * A, delta - A, phi0, powers=(0, 1, 2))
        return float(X0), float(Y0), float(X2 - X1)

    A = 3.0 * (phi0 + phi1)
    X0, Y0, dY = residual(A)
    for _ in range(MAX_ITERATIONS):
        if abs(Y0) <= _ROOT_TOLERANCE or dY == 0:
            break
        step = -Y0 / dY
        improved = False
        for _ in range(30):
            candidate = residual(A + step)
            if abs(candidate[1]) < abs(Y0):
                A += step
                X0, Y0, dY = candidate
                improved = True
                break
            step /= 2
        if not improved:
            break

    if not X0 > 0:
        raise NonConvergenceError("Clothoid fit found no forward solution", residual=abs(Y0) * r)

    L = r / X0
    segment = ClothoidSegment(
        x0=x0,
        y0=y0,
        theta0=float(theta0),
        kappa0=(delta - A) / L,
        kappa_rate=2 * A / (L * L),
        length=L,
    )

    x_end, y_end, _ = segment.end_pose
    position_residual = math.hypot(x_end - float(p1[0]), y_end - float(p1[1]))
    if position_residual > G1_TOLERANCE:
        raise NonConvergenceError("Clothoid fit did not converge", residual=position_residual)
    return segment

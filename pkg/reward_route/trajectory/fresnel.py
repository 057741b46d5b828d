import numpy as np
from typing import List, Sequence, Tuple

_NODES, _WEIGHTS = np.polynomial.legendre.leggauss(24)
# phase change allowed inside one quadrature panel, in radians
_PANEL_SWEEP = 2.0


def phase_integrals(a, b, c, powers: Sequence[int] = (0,)) -> List[Tuple[np.ndarray, np.ndarray]]:
    """
    Generalized Fresnel integrals

        X_k(a, b, c) = int_0^1 t^k cos(a/2 t^2 + b t + c) dt
        Y_k(a, b, c) = int_0^1 t^k sin(a/2 t^2 + b t + c) dt

    by composite Gauss-Legendre quadrature. The inputs broadcast against each other; the panel count follows
    the largest phase sweep |a| + |b| so every panel sees at most two radians of phase change.

    :return: Returns one (X_k, Y_k) pair per requested power.
    """
    a, b, c = np.broadcast_arrays(
        np.asarray(a, dtype=np.float64),
        np.asarray(b, dtype=np.float64),
        np.asarray(c, dtype=np.float64),
    )
    sweep = float(np.max(np.abs(a) + np.abs(b))) if a.size else 0.0
    panels = max(1, int(np.ceil(sweep / _PANEL_SWEEP)))
    h = 1.0 / panels

    t = (np.arange(panels)[:, None] * h + (_NODES[None, :] + 1.0) * h / 2).ravel()
    w = np.tile(_WEIGHTS * h / 2, panels)

    phase = a[..., None] / 2 * t ** 2 + b[..., None] * t + c[..., None]
    cos, sin = np.cos(phase), np.sin(phase)

    results = []
    for k in powers:
        wk = w * t ** k
        results.append((cos @ wk, sin @ wk))
    return results

import numpy as np
from dataclasses import dataclass
from typing import Tuple
from typeguard import typechecked


@dataclass(frozen=True)
class WarpedAlignment():
    """
    A monotone warping path: 0-based index pairs into the two aligned sequences, from (0, 0) to the last
    elements, and its cumulative distance.
    """
    pairs: Tuple[Tuple[int, int], ...]
    cost: float

    def __len__(self) -> int:
        return len(self.pairs)


@typechecked()
def dtw_warp(s1: np.ndarray, s2: np.ndarray) -> WarpedAlignment:
    """
    Dynamic time warping of two point sequences with Euclidean point distances:
    D[i, j] = |s1[i] - s2[j]| + min(D[i-1, j-1], D[i-1, j], D[i, j-1]).
    The backtrack prefers the diagonal step, then the step in s1, then the step in s2.

    :param s1: Points of shape (l1, d) or (l1,).
    :param s2: Points of shape (l2, d) or (l2,).
    :return: Returns the minimal-cost alignment.
    """
    a = s1.reshape(len(s1), -1).astype(np.float64)
    b = s2.reshape(len(s2), -1).astype(np.float64)
    assert len(a) > 0 and len(b) > 0, "Cannot warp empty sequences."
    assert a.shape[1] == b.shape[1], "Both sequences need points of the same dimension."

    distance = np.sqrt(np.sum((a[:, None, :] - b[None, :, :]) ** 2, axis=2))
    l1, l2 = distance.shape
    D = np.full((l1, l2), np.inf)
    for i in range(l1):
        for j in range(l2):
            if i == 0 and j == 0:
                best = 0.0
            else:
                best = min(
                    D[i - 1, j - 1] if i > 0 and j > 0 else np.inf,
                    D[i - 1, j] if i > 0 else np.inf,
                    D[i, j - 1] if j > 0 else np.inf,
                )
            D[i, j] = distance[i, j] + best

    i, j = l1 - 1, l2 - 1
    pairs = [(i, j)]
    while i > 0 or j > 0:
        if i == 0:
            j -= 1
        elif j == 0:
            i -= 1
        else:
            diagonal, up, left = D[i - 1, j - 1], D[i - 1, j], D[i, j - 1]
            if diagonal <= up and diagonal <= left:
                i, j = i - 1, j - 1
            elif up <= left:
                i -= 1
            else:
                j -= 1
        pairs.append((i, j))

    return WarpedAlignment(pairs=tuple(reversed(pairs)), cost=float(D[l1 - 1, l2 - 1]))

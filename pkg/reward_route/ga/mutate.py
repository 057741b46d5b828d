import numpy as np
from typing import Optional, Tuple
from typeguard import typechecked

from reward_route.scenario import WaypointSequence


@typechecked()
def mutate(
        s: WaypointSequence,
        p_m: float,
        rng: np.random.Generator,
        positions: Optional[Tuple[int, int]] = None,
) -> WaypointSequence:
    """
    Swap mutation: with probability p_m two distinct intermediate entries trade places. The start and a fixed
    end never move.

    :param positions: Swaps these two positions of the full sequence unconditionally.
    """
    intermediates = list(s.intermediates)
    if positions is not None:
        first, last = 1, len(intermediates)
        assert all(first <= p <= last for p in positions), f"Positions {positions} are not intermediate."
        a, b = positions[0] - 1, positions[1] - 1
    else:
        if len(intermediates) < 2 or not rng.random() < p_m:
            return s
        a, b = (int(k) for k in rng.choice(len(intermediates), size=2, replace=False))

    intermediates[a], intermediates[b] = intermediates[b], intermediates[a]
    return s.with_intermediates(intermediates)

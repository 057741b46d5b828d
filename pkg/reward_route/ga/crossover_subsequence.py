import numpy as np
from typing import Optional, Tuple
from typeguard import typechecked

from reward_route.scenario import WaypointSequence


@typechecked()
def crossover_subsequence(
        s1: WaypointSequence,
        s2: WaypointSequence,
        rng: np.random.Generator,
        span: Optional[Tuple[int, int]] = None,
        position: Optional[int] = None,
) -> WaypointSequence:
    """
    Random subsequence insertion: a contiguous block of s1's intermediates is removed from s2's intermediates
    and inserted again at a random position.

    :param span: The block as a [start, stop) range of s1's intermediates instead of a random one.
    :param position: The insertion position among the remaining intermediates of s2.
    """
    donor = s1.intermediates
    if span is None:
        start = int(rng.integers(0, len(donor) + 1))
        stop = int(rng.integers(start, len(donor) + 1))
    else:
        start, stop = span
    block = donor[start:stop]
    taken = set(block)
    remainder = [i for i in s2.intermediates if i not in taken]

    if position is None:
        position = int(rng.integers(0, len(remainder) + 1))
    assert 0 <= position <= len(remainder), f"Insert position {position} is out of range."
    return s2.with_intermediates(remainder[:position] + list(block) + remainder[position:])

from typing import Sequence
from typeguard import typechecked

from reward_route.scenario import WaypointSequence


@typechecked()
def decode_truncation(x: Sequence[int], intermediate_count: int, fixed_end: bool) -> WaypointSequence:
    """
    Decodes an integer vector (labels..., k): the first k labels with repeats removed (first occurrence
    wins) become the intermediates.

    :param x: Intermediate waypoint labels in 1..intermediate_count followed by the truncation length k.
    """
    assert len(x) >= 1, "The vector needs at least the truncation length."
    labels, k = [int(v) for v in x[:-1]], int(x[-1])
    for label in labels:
        if not 1 <= label <= intermediate_count:
            raise ValueError(f"Label {label} is outside 1..{intermediate_count}.")
    if not 0 <= k <= min(len(labels), intermediate_count):
        raise ValueError(f"Truncation length {k} is outside 0..{min(len(labels), intermediate_count)}.")

    intermediates = list(dict.fromkeys(labels[:k]))
    end = (intermediate_count + 1,) if fixed_end else ()
    return WaypointSequence((0,) + tuple(intermediates) + end, fixed_end)

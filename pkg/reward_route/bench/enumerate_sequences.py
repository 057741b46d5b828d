import itertools
import math
from typing import Iterator
from typeguard import typechecked

from reward_route.errors import EnumerationLimitError
from reward_route.scenario import WaypointSequence

MAX_ENUMERATION = 8


def sequence_count(intermediate_count: int) -> int:
    """
    Number of ordered selections without repetition: sum over k of n! / (n - k)!.
    """
    n = intermediate_count
    return sum(math.perm(n, k) for k in range(n + 1))


@typechecked()
def enumerate_sequences(intermediate_count: int, fixed_end: bool) -> Iterator[WaypointSequence]:
    """
    Every waypoint sequence of a scenario with `intermediate_count` intermediate waypoints (indices 1..n),
    ordered by length and then lexicographically.
    """
    if intermediate_count > MAX_ENUMERATION:
        raise EnumerationLimitError(
            f"Enumerating {intermediate_count} intermediate waypoints exceeds the limit of {MAX_ENUMERATION}."
        )
    assert intermediate_count >= 0, f"The intermediate count must not be negative (got {intermediate_count})."

    labels = range(1, intermediate_count + 1)
    end = (intermediate_count + 1,) if fixed_end else ()

    def generate():
        for k in range(intermediate_count + 1):
            for selection in itertools.permutations(labels, k):
                yield WaypointSequence((0,) + selection + end, fixed_end)

    return generate()

from dataclasses import dataclass
from typing import Tuple, Iterable, List

from .scenario import Scenario


@dataclass(frozen=True)
class WaypointSequence():
    """
    An ordered, duplicate-free selection of waypoint indices. The first entry is always the start (0) and,
    with `fixed_end`, the last entry is always the end waypoint.
    """
    indices: Tuple[int, ...]
    fixed_end: bool = False

    def __post_init__(self):
        object.__setattr__(self, "indices", tuple(int(i) for i in self.indices))

    @classmethod
    def wrap(cls, intermediates: Iterable[int], scenario: Scenario) -> 'WaypointSequence':
        indices = (0,) + tuple(intermediates)
        if scenario.fixed_end:
            indices += (len(scenario.waypoints) - 1,)
        return cls(indices, scenario.fixed_end)

    @property
    def intermediates(self) -> Tuple[int, ...]:
        return self.indices[1:-1] if self.fixed_end else self.indices[1:]

    def with_intermediates(self, intermediates: Iterable[int]) -> 'WaypointSequence':
        indices = (self.indices[0],) + tuple(intermediates)
        if self.fixed_end:
            indices += (self.indices[-1],)
        return WaypointSequence(indices, self.fixed_end)

    def findings(self, scenario: Scenario) -> List[str]:
        findings = []
        if not self.indices or self.indices[0] != 0:
            findings.append("sequence must start at waypoint 0")
        if scenario.fixed_end and (len(self.indices) < 2 or self.indices[-1] != len(scenario.waypoints) - 1):
            findings.append("sequence must end at the fixed end waypoint")
        if len(set(self.indices)) != len(self.indices):
            findings.append("sequence contains duplicate waypoints")
        allowed = set(scenario.intermediate_indices)
        if any(i not in allowed for i in self.intermediates):
            findings.append("sequence contains indices outside the intermediate range")
        return findings

    def __len__(self) -> int:
        return len(self.indices)

    def __iter__(self):
        return iter(self.indices)

    def __getitem__(self, item):
        return self.indices[item]

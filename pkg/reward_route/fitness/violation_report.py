from dataclasses import dataclass, field
from typing import Dict, Optional

from reward_route.scenario import WaypointSequence

# channel -> weight kind
CHANNEL_KINDS = {
    'speed': 'input',
    'angular_rate': 'input',
    'acceleration': 'state',
}


@dataclass(frozen=True)
class ViolationReport():
    """
    Constraint violations of one planned sequence. `channels` holds the bounded input and state channels;
    `failure` names the pipeline stage that failed, in which case every violation is 1.
    """
    time: float
    distance: float
    obstacle: float
    channels: Dict[str, float] = field(default_factory=dict)
    t_f: float = 0.0
    path_length: float = 0.0
    reward: float = 0.0
    failure: Optional[str] = None

    @property
    def feasible(self) -> bool:
        return self.failure is None and self.time == 0 and self.distance == 0 and self.obstacle == 0 \
            and all(v == 0 for v in self.channels.values())

    def as_dict(self) -> Dict[str, float]:
        violations = {'time': self.time, 'distance': self.distance, 'obstacle': self.obstacle}
        violations.update(self.channels)
        return violations


@dataclass(frozen=True)
class EvaluatedIndividual():
    sequence: WaypointSequence
    fitness: float
    report: ViolationReport

from dataclasses import dataclass, fields
from typing import Mapping

# document keys of the scenario's 'weights' section
_DOCUMENT_KEYS = {
    'time': 'alpha_time',
    'distance': 'alpha_dist',
    'obstacle': 'alpha_obstacle',
    'input': 'alpha_input',
    'state': 'alpha_state',
}


@dataclass(frozen=True)
class PenaltyWeights():
    alpha_time: float = 10.0
    alpha_dist: float = 10.0
    alpha_obstacle: float = 100.0
    alpha_input: float = 10.0
    alpha_state: float = 10.0

    def __post_init__(self):
        for f in fields(self):
            assert getattr(self, f.name) >= 0, f"Penalty weight '{f.name}' must not be negative."

    @classmethod
    def from_document(cls, weights: Mapping[str, float]) -> 'PenaltyWeights':
        return cls(**{_DOCUMENT_KEYS[k]: float(v) for k, v in weights.items()})

    def channel_weight(self, kind: str) -> float:
        return self.alpha_input if kind == 'input' else self.alpha_state

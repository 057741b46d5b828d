import json
import math
from dataclasses import dataclass, field, asdict
from typing import Any, Dict, List, Optional
from typeguard import typechecked

from reward_route.fitness import EvaluatedIndividual
from reward_route.ga import GAConfig
from reward_route.scenario import Scenario, scenario_digest


def _finite_or_none(value: float) -> Optional[float]:
    return value if math.isfinite(value) else None


@dataclass(frozen=True)
class SolutionDocument():
    """
    The planning result as stored in `solution.json`. Infinite values (failed plans) are stored as null.
    """
    scenario_digest: str
    sequence: List[int]
    fitness: float
    reward: float
    t_f: Optional[float]
    path_length: Optional[float]
    violations: Dict[str, float]
    feasible: bool
    failure: Optional[str] = None
    trajectory_file: Optional[str] = None
    config: Dict[str, Any] = field(default_factory=dict)
    seed: Optional[int] = None

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> 'SolutionDocument':
        return cls(**json.loads(text))


@typechecked()
def build_solution_document(
        best: EvaluatedIndividual,
        scenario: Scenario,
        config: Optional[GAConfig] = None,
        trajectory_file: Optional[str] = None,
) -> SolutionDocument:
    report = best.report
    return SolutionDocument(
        scenario_digest=scenario_digest(scenario),
        sequence=list(best.sequence.indices),
        fitness=best.fitness,
        reward=report.reward,
        t_f=_finite_or_none(report.t_f),
        path_length=_finite_or_none(report.path_length),
        violations=report.as_dict(),
        feasible=report.feasible,
        failure=report.failure,
        trajectory_file=trajectory_file,
        config=asdict(config) if config is not None else {},
        seed=config.seed if config is not None else None,
    )

from dataclasses import dataclass, fields, replace
from typing import Optional, Mapping, Any

from reward_route.scenario import Scenario


@dataclass(frozen=True)
class GAConfig():
    """
    Genetic algorithm settings. Without `population_size` the population grows linearly with the number
    of waypoints: c = max(4, beta_p * waypoint count).
    """
    population_size: Optional[int] = None
    beta_p: float = 20.0
    p_m: float = 0.1
    elite: float = 0.01
    truncation: float = 0.2
    warp_fraction: float = 0.5
    max_iter: int = 300
    convergence_window: int = 50
    convergence_epsilon: float = 1e-6
    seed: int = 0
    threads: int = 1

    def __post_init__(self):
        assert self.population_size is None or self.population_size >= 4, \
            f"The population needs at least 4 individuals (got {self.population_size})."
        assert self.beta_p > 0, f"beta_p must be positive (got {self.beta_p})."
        for name in ['p_m', 'elite', 'truncation', 'warp_fraction']:
            assert 0 <= getattr(self, name) <= 1, f"'{name}' must be in [0, 1] (got {getattr(self, name)})."
        assert self.elite + self.truncation < 1, "Elite and truncation fractions must leave room for offspring."
        assert self.max_iter >= 1, f"At least one generation is needed (got {self.max_iter})."
        assert self.convergence_window >= 1, f"The convergence window must be positive (got {self.convergence_window})."
        assert self.seed >= 0, f"The seed must not be negative (got {self.seed})."
        assert self.threads >= 1, f"At least one evaluation thread is needed (got {self.threads})."

    def population_for(self, scenario: Scenario) -> int:
        if self.population_size is not None:
            return self.population_size
        return max(4, int(round(self.beta_p * len(scenario.waypoints))))

    def updated(self, settings: Mapping[str, Any]) -> 'GAConfig':
        """
        A copy with the given settings applied; `None` values are skipped so unset command line flags keep
        the current value.
        """
        known = {f.name for f in fields(self)}
        unknown = set(settings) - known
        assert not unknown, f"Unknown solver settings: {sorted(unknown)}."
        return replace(self, **{k: v for k, v in settings.items() if v is not None})

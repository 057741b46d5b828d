from dataclasses import dataclass
from typing import Optional
from typeguard import typechecked

from reward_route.scenario import Scenario, OccupancyGrid, rasterize
from reward_route.search import PairwiseCache
from reward_route.trajectory import TimingOptions

from .penalty_weights import PenaltyWeights


@dataclass(frozen=True, eq=False)
class FitnessContext():
    """
    Everything a fitness evaluation reads: the scenario, its inflated grid, the shared pairwise route cache,
    the penalty weights and the timing options. Built once per solver run.
    """
    scenario: Scenario
    grid: OccupancyGrid
    cache: Optional[PairwiseCache]
    weights: PenaltyWeights
    timing: TimingOptions


@typechecked()
def build_context(
        scenario: Scenario,
        weights: Optional[PenaltyWeights] = None,
        timing: Optional[TimingOptions] = None,
        use_cache: bool = True,
) -> FitnessContext:
    """
    :param scenario: The scenario.
    :param weights: Penalty weights; defaults to the scenario's 'weights' section over the built-in defaults.
    :param timing: Timing options; defaults to the scenario's 'timing' section over the built-in defaults.
    :param use_cache: Shares pairwise routes between evaluations.
    """
    return FitnessContext(
        scenario=scenario,
        grid=rasterize(scenario.environment, scenario.grid_resolution, scenario.inflation_radius),
        cache=PairwiseCache() if use_cache else None,
        weights=weights if weights is not None else PenaltyWeights.from_document(scenario.weights),
        timing=timing if timing is not None else TimingOptions(**scenario.timing),
    )

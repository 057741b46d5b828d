from reward_route.scenario import WaypointSequence

from .ga_config import GAConfig
from .init_population import init_population, random_sequence
from .dtw_warp import dtw_warp, WarpedAlignment
from .crossover_warp import crossover_warp, project_to_waypoints, BETA_RANGE
from .crossover_subsequence import crossover_subsequence
from .mutate import mutate
from .select_and_breed import select_and_breed, stochastic_universal_sampling
from .run_ga import run_ga, HISTORY_COLUMNS

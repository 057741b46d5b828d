from .environment import Environment, AxisAlignedRect
from .waypoint import Waypoint
from .constraint_set import ConstraintSet, DiffDriveParams, QuadrupedParams
from .scenario import Scenario, RobotModel, DEFAULT_GRID_RESOLUTION
from .occupancy_grid import OccupancyGrid
from .rasterize import rasterize
from .is_free import is_free
from .validate import validate
from .load_scenario import load_scenario, SCENARIO_SCHEMA
from .save_scenario import save_scenario, scenario_digest
from .builtin_maps import surveillance_map, arena_map, benchmark_environment, BOOSTED_REWARD
from .waypoint_sequence import WaypointSequence

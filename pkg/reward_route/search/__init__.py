from .grid_path import GridPath
from .astar import astar
from .pairwise_cache import PairwiseCache
from .polyline_for_sequence import polyline_for_sequence, pairwise_path

import threading
from typing import Callable, Dict, Tuple, Union

from reward_route.errors import NoPathError

from .grid_path import GridPath


class PairwiseCache():
    """
    Memoized waypoint-pair routes for one scenario. Lookups run without locking; insertions and the hit and
    miss counters are serialized. Failed searches are stored as well and raised again on lookup.
    """
    def __init__(self):
        self._routes: Dict[Tuple[int, int], Union[GridPath, NoPathError]] = {}
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def get_or_compute(self, key: Tuple[int, int], compute: Callable[[], GridPath]) -> GridPath:
        route = self._routes.get(key)
        if route is None:
            with self._lock:
                self.misses += 1
            try:
                route = compute()
            except NoPathError as e:
                route = e
            with self._lock:
                route = self._routes.setdefault(key, route)
        else:
            with self._lock:
                self.hits += 1

        if isinstance(route, NoPathError):
            raise route
        return route

    def __len__(self) -> int:
        return len(self._routes)

    def __contains__(self, key: Tuple[int, int]) -> bool:
        return key in self._routes

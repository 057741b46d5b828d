from typeguard import typechecked

from .piecewise_clothoid import PiecewiseClothoid


@typechecked()
def length(path: PiecewiseClothoid) -> float:
    return float(sum(s.length for s in path.segments))

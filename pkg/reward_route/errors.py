from typing import List, Optional, Tuple


class RewardRouteError(Exception):
    pass


class ScenarioParseError(RewardRouteError):
    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None, field: Optional[str] = None):
        location = []
        if line is not None:
            location.append(f"line {line}")
        if column is not None:
            location.append(f"column {column}")
        if field is not None:
            location.append(f"field '{field}'")
        if location:
            message = f"{message} ({', '.join(location)})"
        super().__init__(message)
        self.line = line
        self.column = column
        self.field = field


class ScenarioValidationError(RewardRouteError):
    def __init__(self, findings: List[str]):
        super().__init__("Invalid scenario:\n" + "\n".join(f" * {f}" for f in findings))
        self.findings = findings


class InvalidEndpointError(RewardRouteError):
    pass


class NoPathError(RewardRouteError):
    def __init__(self, message: str, pair: Optional[Tuple[int, int]] = None):
        if pair is not None:
            message = f"{message} (waypoints {pair[0]} -> {pair[1]})"
        super().__init__(message)
        self.pair = pair


class NonConvergenceError(RewardRouteError):
    def __init__(self, message: str, residual: float, segment_index: Optional[int] = None):
        if segment_index is not None:
            message = f"{message} (segment {segment_index})"
        super().__init__(f"{message}, residual {residual:.3e}")
        self.residual = residual
        self.segment_index = segment_index


class InfeasibleSpeedBandError(RewardRouteError):
    pass


class ZeroSpeedSampleError(RewardRouteError):
    pass


class DegenerateVelocityError(RewardRouteError):
    pass


class ZeroInputError(RewardRouteError):
    pass


class EnumerationLimitError(RewardRouteError):
    pass


class SamplingError(RewardRouteError):
    pass


class UsageError(RewardRouteError):
    pass

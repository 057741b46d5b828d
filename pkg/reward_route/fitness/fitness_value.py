from typeguard import typechecked

from reward_route.scenario import Scenario

from .penalty_weights import PenaltyWeights
from .violation_report import ViolationReport, CHANNEL_KINDS


def penalty(report: ViolationReport, weights: PenaltyWeights) -> float:
    R = weights.alpha_time * report.time + weights.alpha_dist * report.distance + weights.alpha_obstacle * report.obstacle
    for name, value in report.channels.items():
        R += weights.channel_weight(CHANNEL_KINDS[name]) * value
    return R


@typechecked()
def fitness_value(report: ViolationReport, scenario: Scenario, weights: PenaltyWeights) -> float:
    """
    h = g_max / max(g, eps_g) + R, with R the weighted sum of all violations and eps_g half the smallest
    positive intermediate reward. A failed pipeline collects nothing. Without any intermediate reward the
    reward term is 1.
    """
    g_max = scenario.max_reward
    if g_max <= 0:
        reward_term = 1.0
    else:
        g = 0.0 if report.failure is not None else report.reward
        reward_term = g_max / max(g, scenario.reward_floor)
    return reward_term + penalty(report, weights)

from typeguard import typechecked

from reward_route.errors import ScenarioValidationError
from reward_route.fitness import build_context, evaluate_fitness
from reward_route.scenario import Scenario, WaypointSequence, scenario_digest

from .solution_document import SolutionDocument


@typechecked()
def reevaluate_solution(document: SolutionDocument, scenario: Scenario) -> float:
    """
    Scores the stored sequence again against the scenario it was planned for.

    :return: Returns the fitness, equal to the stored one for an unchanged scenario.
    """
    if document.scenario_digest != scenario_digest(scenario):
        raise ScenarioValidationError(["the solution was planned for a different scenario"])
    seq = WaypointSequence(tuple(document.sequence), scenario.fixed_end)
    return evaluate_fitness(seq, build_context(scenario)).fitness

from typing import Optional
from typeguard import typechecked

from reward_route.fitness import EvaluatedIndividual, FitnessContext, PenaltyWeights, build_context, evaluate_fitness
from reward_route.scenario import Scenario

from .enumerate_sequences import enumerate_sequences, sequence_count


def _rank(e: EvaluatedIndividual):
    return e.fitness, e.report.path_length, len(e.sequence)


@typechecked()
def brute_force_best(
        scenario: Scenario,
        weights: Optional[PenaltyWeights] = None,
        context: Optional[FitnessContext] = None,
        progress_output: bool = False,
) -> EvaluatedIndividual:
    """
    The exact optimum by evaluating every sequence with the solver's own fitness. Ties go to the shorter path,
    then to the shorter sequence, then to the first enumerated.
    """
    context = context if context is not None else build_context(scenario, weights)
    n = len(scenario.intermediate_indices)
    total = sequence_count(n)

    best = None
    for count, seq in enumerate(enumerate_sequences(n, scenario.fixed_end), start=1):
        candidate = evaluate_fitness(seq, context)
        if best is None or _rank(candidate) < _rank(best):
            best = candidate
        if progress_output and (count % 1000 == 0 or count == total):
            print(f"Evaluated {count}/{total} sequences, best h = {best.fitness:.6f}.")
    return best

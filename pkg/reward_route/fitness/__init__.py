from .penalty_weights import PenaltyWeights
from .violation_time import violation_time
from .violation_distance import violation_distance
from .violation_obstacle import violation_obstacle
from .violation_input import violation_input
from .violation_report import ViolationReport, EvaluatedIndividual, CHANNEL_KINDS
from .fitness_value import fitness_value, penalty
from .fitness_context import FitnessContext, build_context
from .plan_trajectory import plan_trajectory, evaluation_sample_count
from .evaluate_fitness import evaluate_fitness, measure_violations, failure_report, channel_bounds, model_trace

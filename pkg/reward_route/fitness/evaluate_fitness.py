import math
import numpy as np
from typing import Dict
from typeguard import typechecked

from reward_route.errors import (
    NoPathError, NonConvergenceError, DegenerateVelocityError, ZeroSpeedSampleError, InvalidEndpointError,
)
from reward_route.flatness import FlatTrace, StateInputTrace, flat_trace_from_trajectory, diffdrive_forward, quadruped_forward
from reward_route.scenario import WaypointSequence, RobotModel, DiffDriveParams, QuadrupedParams, Scenario
from reward_route.trajectory import Trajectory

from .fitness_context import FitnessContext
from .fitness_value import fitness_value
from .plan_trajectory import plan_trajectory
from .violation_distance import violation_distance
from .violation_input import violation_input
from .violation_obstacle import violation_obstacle
from .violation_report import ViolationReport, EvaluatedIndividual
from .violation_time import violation_time

PIPELINE_ERRORS = (NoPathError, NonConvergenceError, DegenerateVelocityError, ZeroSpeedSampleError, InvalidEndpointError)


def channel_bounds(scenario: Scenario) -> Dict[str, float]:
    c = scenario.constraints
    bounds = {'speed': c.v_max}
    if c.omega_max is not None:
        bounds['angular_rate'] = c.omega_max
    if c.accel_max is not None:
        bounds['acceleration'] = c.accel_max
    return bounds


def model_trace(flat: FlatTrace, scenario: Scenario) -> StateInputTrace:
    """
    States and inputs of the scenario's robot model along a flat trace.
    """
    if scenario.model is RobotModel.QUADRUPED:
        params = scenario.model_params if isinstance(scenario.model_params, QuadrupedParams) else QuadrupedParams()
        return quadruped_forward(flat, standard_body_twist=params.standard_body_twist)
    params = scenario.model_params if isinstance(scenario.model_params, DiffDriveParams) else None
    return diffdrive_forward(flat, params)


def _channel_values(traj: Trajectory, scenario: Scenario) -> Dict[str, np.ndarray]:
    flat = flat_trace_from_trajectory(traj)
    trace = model_trace(flat, scenario)
    if scenario.model is RobotModel.QUADRUPED:
        speed = np.hypot(trace.inputs[:, 0], trace.inputs[:, 1])
        angular_rate = trace.inputs[:, 2]
    else:
        speed, angular_rate = trace.inputs[:, 0], trace.inputs[:, 1]
    return {
        'speed': speed,
        'angular_rate': angular_rate,
        'acceleration': np.hypot(flat.y_ddot[:, 0], flat.y_ddot[:, 1]),
    }


def measure_violations(traj: Trajectory, context: FitnessContext, reward: float) -> ViolationReport:
    scenario = context.scenario
    bounds = channel_bounds(scenario)
    if len(traj) < 2:
        channels = {name: 0.0 for name in bounds}
    else:
        values = _channel_values(traj, scenario)
        channels = {name: violation_input(traj.t, values[name], bound) for name, bound in bounds.items()}

    return ViolationReport(
        time=violation_time(traj.t_f, scenario.constraints.t_max),
        distance=violation_distance(traj.total_length, scenario.constraints.d_max),
        obstacle=violation_obstacle(traj, context.grid),
        channels=channels,
        t_f=traj.t_f,
        path_length=traj.total_length,
        reward=reward,
    )


def failure_report(scenario: Scenario, reward: float, reason: str) -> ViolationReport:
    return ViolationReport(
        time=1.0,
        distance=1.0,
        obstacle=1.0,
        channels={name: 1.0 for name in channel_bounds(scenario)},
        t_f=math.inf,
        path_length=math.inf,
        reward=reward,
        failure=reason,
    )


@typechecked()
def evaluate_fitness(seq: WaypointSequence, context: FitnessContext) -> EvaluatedIndividual:
    """
    Plans the sequence and scores it: h = g_max / g + R (see `fitness_value`). Planning failures never
    raise, they yield the maximal unit violations instead.

    :param seq: The waypoint sequence.
    :param context: Scenario, grid, route cache, penalty weights and timing options.
    :return: Returns the sequence with its fitness and violation report.
    """
    scenario = context.scenario
    findings = seq.findings(scenario)
    assert not findings, f"Invalid waypoint sequence {seq.indices}: {'; '.join(findings)}."

    reward = float(sum(scenario.waypoints[i].reward for i in seq.intermediates))
    try:
        _, _, traj = plan_trajectory(seq, context)
        report = measure_violations(traj, context, reward)
    except PIPELINE_ERRORS as e:
        report = failure_report(scenario, reward, f"{type(e).__name__}: {e}")

    return EvaluatedIndividual(sequence=seq, fitness=fitness_value(report, scenario, context.weights), report=report)

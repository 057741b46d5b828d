import plotly.graph_objects as go
from typing import Optional
from typeguard import typechecked

from reward_route.scenario import Scenario, WaypointSequence
from reward_route.trajectory import Trajectory


@typechecked()
def draw_solution(
        scenario: Scenario,
        trajectory: Optional[Trajectory] = None,
        sequence: Optional[WaypointSequence] = None,
        title: str = "Mission Plan",
        show=True,
):
    """
    Obstacles as filled rectangles, waypoints as circles whose size grows with the reward, the trajectory
    as a line. Visited waypoints are labelled with their position in the sequence.
    """
    env = scenario.environment
    layout = go.Layout(
        title=title,
        xaxis=dict(title="x [m]", range=[env.x_min, env.x_max]),
        yaxis=dict(title="y [m]", range=[env.y_min, env.y_max], scaleanchor="x", scaleratio=1),
        showlegend=True,
    )
    fig = go.Figure(layout=layout)

    for o in env.obstacles:
        fig.add_shape(type="rect", x0=o.x, y0=o.y, x1=o.x_max, y1=o.y_max, fillcolor="firebrick",
                      opacity=0.7, line=dict(width=0))

    max_reward = max([w.reward for w in scenario.waypoints] + [1e-9])
    intermediates = scenario.intermediate_indices
    order = {i: n for n, i in enumerate(sequence.intermediates, start=1)} if sequence is not None else {}
    fig.add_trace(go.Scatter(
        x=[scenario.waypoints[i].x for i in intermediates],
        y=[scenario.waypoints[i].y for i in intermediates],
        mode='markers+text',
        name="waypoints",
        marker=dict(
            size=[8 + 20 * scenario.waypoints[i].reward / max_reward for i in intermediates],
            color=["royalblue" if i in order else "lightsteelblue" for i in intermediates],
            line=dict(width=1, color='DarkSlateGrey'),
        ),
        text=[str(order[i]) if i in order else "" for i in intermediates],
        textposition="top center",
    ))

    fixed = scenario.fixed_indices
    fig.add_trace(go.Scatter(
        x=[scenario.waypoints[i].x for i in fixed],
        y=[scenario.waypoints[i].y for i in fixed],
        mode='markers',
        name="start / end",
        marker=dict(size=12, symbol="square", color="black"),
    ))

    if trajectory is not None:
        fig.add_trace(go.Scatter(x=trajectory.x, y=trajectory.y, mode='lines', name="trajectory",
                                 line=dict(color="darkorange", width=2)))

    if show:
        fig.show()
    else:
        return fig

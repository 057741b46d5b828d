import math
import numpy as np
import plotly.graph_objects as go
import pandas as pd
from typeguard import typechecked


@typechecked()
def draw_complexity(
        table: pd.DataFrame,
        slope: float,
        time_column: str = 'time_s',
        title: str = "Time to Best-Found Solution",
        show=True,
):
    """
    Log-log scatter of the run time over the waypoint count with the fitted power law through the means.
    """
    layout = go.Layout(
        title=title,
        xaxis=dict(title="waypoints", type="log"),
        yaxis=dict(title="time [s]", type="log"),
    )
    fig = go.Figure(layout=layout)
    fig.add_trace(go.Scatter(x=table['n'], y=table[time_column], mode='markers', name="runs",
                             marker=dict(size=8, line=dict(width=1, color='DarkSlateGrey'))))

    data = table[(table['n'] > 0) & (table[time_column] > 0)]
    if not math.isnan(slope) and len(data) > 0:
        log_n, log_t = np.log(data['n'].to_numpy(dtype=np.float64)), np.log(data[time_column].to_numpy(dtype=np.float64))
        intercept = float(np.mean(log_t - slope * log_n))
        n = np.linspace(data['n'].min(), data['n'].max(), 50)
        fig.add_trace(go.Scatter(x=n, y=np.exp(intercept) * n ** slope, mode='lines', name=f"fit: O(n^{slope:.2f})"))

    if show:
        fig.show()
    else:
        return fig

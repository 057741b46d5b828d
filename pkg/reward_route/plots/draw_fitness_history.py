import plotly.graph_objects as go
import pandas as pd
from typeguard import typechecked


@typechecked()
def draw_fitness_history(history: pd.DataFrame, title: str = "Fitness per Generation", y_log: bool = True, show=True):
    layout = go.Layout(
        title=title,
        xaxis=dict(title="generation"),
        yaxis=dict(title="h", type="log" if y_log else "linear"),
    )
    fig = go.Figure(layout=layout)
    fig.add_trace(go.Scatter(x=history['generation'], y=history['best_h'], mode='lines', name="best"))
    fig.add_trace(go.Scatter(x=history['generation'], y=history['mean_h'], mode='lines', name="mean"))
    if show:
        fig.show()
    else:
        return fig

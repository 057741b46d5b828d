#!/usr/bin/env python
# coding: utf-8

# # Quadruped in the Indoor Arena

# In[1]:


from pathlib import Path
import plotly.graph_objects as go


# In[2]:


from reward_route.scenario import arena_map
from reward_route.fitness import build_context, plan_trajectory, model_trace
from reward_route.flatness import flat_trace_from_trajectory
from reward_route.ga import GAConfig, run_ga
from reward_route.plots import draw_solution
from reward_route.data import cached


# In[3]:


cache_path = Path("cached_data")


# In[4]:


@cached(cache_path / "quadruped_arena.pickle")
def plan(standard_body_twist, seed):
    scenario = arena_map(standard_body_twist=standard_body_twist)
    best, history = run_ga(scenario, GAConfig(seed=seed), detailed_output=True)
    return scenario, best, history


scenario, best, history = plan(True, 3)
print(f"Sequence {list(best.sequence.indices)}: reward {best.report.reward:g} of {scenario.max_reward:g}, "
      f"distance {best.report.path_length:.2f} m (limit {scenario.constraints.d_max} m)")


# In[5]:


_, _, trajectory = plan_trajectory(best.sequence, build_context(scenario))
draw_solution(scenario, trajectory, best.sequence, title="Quadruped")


# ## Body velocities along the trajectory

# In[6]:


states = model_trace(flat_trace_from_trajectory(trajectory), scenario).to_frame()

fig = go.Figure(layout=go.Layout(title="Body Velocities", xaxis=dict(title="t [s]"), yaxis=dict(title="velocity")))
for column, name in [('u1', 'forward [m/s]'), ('u2', 'lateral [m/s]'), ('u3', 'yaw rate [rad/s]')]:
    fig.add_trace(go.Scatter(x=states['t'], y=states[column], mode='lines', name=name))
fig.show()


# ## The position-dependent map

# In[7]:


scenario_v, best_v, _ = plan.__wrapped__(False, 3)
print(f"Sequence {list(best_v.sequence.indices)}: reward {best_v.report.reward:g}, "
      f"speed violation {best_v.report.channels['speed']:.3f}")

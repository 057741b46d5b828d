#!/usr/bin/env python
# coding: utf-8

# # Surveillance Mission: Reward Increment and Time Window

# In[1]:


from pathlib import Path
from dataclasses import replace
import pandas as pd


# In[2]:


from reward_route.scenario import surveillance_map, BOOSTED_REWARD
from reward_route.fitness import build_context, plan_trajectory
from reward_route.ga import GAConfig, run_ga
from reward_route.plots import draw_solution, draw_fitness_history
from reward_route.data import cached


# In[3]:


cache_path = Path("cached_data")
config = GAConfig(seed=7)


# ## Baseline: all waypoints have the same reward

# In[4]:


@cached(cache_path / "surveillance_baseline.pickle")
def plan(reward_boost, t_max):
    scenario = surveillance_map(reward_boost=reward_boost)
    scenario = replace(scenario, constraints=replace(scenario.constraints, t_max=t_max))
    best, history = run_ga(scenario, config, detailed_output=True)
    return scenario, best, history


scenario, best, history = plan(None, 40.0)
print(f"Sequence {list(best.sequence.indices)}, reward {best.report.reward:g}, t_f = {best.report.t_f:.1f} s, h = {best.fitness:.4f}")


# In[5]:


_, _, trajectory = plan_trajectory(best.sequence, build_context(scenario))
draw_solution(scenario, trajectory, best.sequence, title="Baseline")
draw_fitness_history(history)


# ## One waypoint becomes more important

# In[6]:


boosted_waypoint = 13

plan_boosted = cached(cache_path / "surveillance_boosted.pickle")(plan.__wrapped__)
scenario_b, best_b, history_b = plan_boosted(boosted_waypoint, 40.0)
print(f"Waypoint {boosted_waypoint} has reward {BOOSTED_REWARD:g} now.")
print(f"Sequence {list(best_b.sequence.indices)}, reward {best_b.report.reward:g}, t_f = {best_b.report.t_f:.1f} s")


# In[7]:


_, _, trajectory_b = plan_trajectory(best_b.sequence, build_context(scenario_b))
draw_solution(scenario_b, trajectory_b, best_b.sequence, title=f"Waypoint {boosted_waypoint} boosted")


# ## Changing the mission time window

# In[8]:


rows = []
for t_max in [25.0, 30.0, 40.0, 50.0, 60.0]:
    s, b, _ = plan.__wrapped__(None, t_max)
    rows.append([t_max, len(b.sequence.intermediates), b.report.reward, b.report.t_f, b.fitness, b.report.feasible])

time_windows = pd.DataFrame(rows, columns=['t_max', 'visited', 'reward', 't_f', 'h', 'feasible'])
time_windows

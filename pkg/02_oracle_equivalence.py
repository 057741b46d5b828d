#!/usr/bin/env python
# coding: utf-8

# # Genetic Algorithm vs. Exhaustive Search

# In[1]:


from pathlib import Path
import time
import numpy as np
import pandas as pd


# In[2]:


from reward_route.bench import random_scenario, brute_force_best, sequence_count, trial_seed
from reward_route.fitness import build_context
from reward_route.ga import GAConfig, run_ga
from reward_route.data import cached


# In[3]:


cache_path = Path("cached_data")
intermediate_count = 5
scenario_count = 20
seed = 2024
print(f"{sequence_count(intermediate_count)} sequences per scenario.")


# In[4]:


@cached(cache_path / "oracle_equivalence.pickle")
def compare(intermediate_count, scenario_count, seed):
    rows = []
    for n in range(scenario_count):
        row_seed = trial_seed(seed, n)
        scenario = random_scenario(intermediate_count, np.random.default_rng([row_seed, 0]))
        context = build_context(scenario)

        start = time.perf_counter()
        oracle = brute_force_best(scenario, context=context)
        oracle_time = time.perf_counter() - start

        start = time.perf_counter()
        ga, history = run_ga(scenario, GAConfig(population_size=100, seed=row_seed), context=context)
        ga_time = time.perf_counter() - start

        rows.append([n, row_seed, oracle.fitness, ga.fitness, oracle_time, ga_time, len(history)])
    return pd.DataFrame(rows, columns=['scenario', 'seed', 'oracle_h', 'ga_h', 'oracle_s', 'ga_s', 'generations'])


results = compare(intermediate_count, scenario_count, seed)
results['match'] = (results['ga_h'] - results['oracle_h']).abs() <= 1e-9
results


# In[5]:


print(f"The genetic algorithm found the optimum in {results['match'].sum()} of {len(results)} scenarios.")
print(f"Total run time: {results['oracle_s'].sum() + results['ga_s'].sum():.1f} s")

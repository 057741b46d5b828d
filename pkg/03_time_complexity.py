#!/usr/bin/env python
# coding: utf-8

# # Time Complexity of the Genetic Algorithm

# In[1]:


from pathlib import Path


# In[2]:


from reward_route.bench import complexity_sweep, compare_methods
from reward_route.ga import GAConfig
from reward_route.plots import draw_complexity
from reward_route.data import cached, write_bench_csv


# In[3]:


cache_path = Path("cached_data")
result_path = Path("results")
counts = [10, 20, 30, 40, 50, 60]
trials = 30


# In[4]:


@cached(cache_path / "time_complexity.pickle")
def sweep(counts, trials, seed):
    return complexity_sweep(counts, trials, GAConfig(), seed=seed, progress_output=True)


result = sweep(counts, trials, 1)
write_bench_csv(result, result_path / "bench.csv")
print(f"Fitted growth: O(n^{result.slope:.2f})")


# In[5]:


draw_complexity(result.table, result.slope)


# In[6]:


result.table.groupby('n')[['best_h', 'best_reward', 'time_s']].agg(['mean', 'min', 'max'])


# ## Comparison with the truncation encoding and the exhaustive oracle

# In[7]:


@cached(cache_path / "method_comparison.pickle")
def comparison(counts, trials, seed):
    return compare_methods(counts, trials, GAConfig(), seed=seed, progress_output=True)


methods = comparison([4, 6, 8, 10, 20], 5, 1)
methods.table.groupby('n')[['ga_h', 'truncation_h', 'oracle_h', 'ga_time_s', 'truncation_time_s', 'oracle_time_s']].mean()

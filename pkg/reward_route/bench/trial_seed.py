import numpy as np


def trial_seed(seed: int, row: int) -> int:
    """
    Independent seed of one benchmark row, derived from the run seed and the row index.
    """
    return int(np.random.SeedSequence([seed, row]).generate_state(1)[0])

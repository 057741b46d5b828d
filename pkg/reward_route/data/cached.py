import pickle
from functools import wraps
from pathlib import Path
from typeguard import typechecked


@typechecked()
def cached(cache_file_path: Path):
    """
    Stores the result of the decorated function in a pickle file together with the call arguments. Calls
    with the same arguments (compared by `repr`) load the stored result instead of running again.
    """
    def inner_cached(func):
        @wraps(func)
        def wrapper(*args, **kwargs):
            key = repr((args, sorted(kwargs.items())))
            if cache_file_path.exists():
                with cache_file_path.open("rb") as f:
                    stored_key, ret = pickle.load(f)
                if stored_key == key:
                    return ret

            ret = func(*args, **kwargs)
            cache_file_path.parent.mkdir(parents=True, exist_ok=True)
            with cache_file_path.open("wb") as f:
                pickle.dump((key, ret), f)
            return ret

        return wrapper
    return inner_cached

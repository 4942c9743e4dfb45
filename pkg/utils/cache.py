import functools
import threading
from typing import Any, Callable, Dict, Hashable, Tuple


def call_key(args: Tuple[Any, ...], kwargs: Dict[str, Any]) -> Hashable:
    return args, tuple(sorted(kwargs.items()))


def memoize(func: Callable) -> Callable:
    """Cache results of a pure function of hashable arguments; safe across verify threads."""
    cache: Dict[Hashable, Any] = {}
    lock = threading.Lock()

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        key = call_key(args, kwargs)
        with lock:
            if key in cache:
                return cache[key]
        res = func(*args, **kwargs)
        with lock:
            cache.setdefault(key, res)
        return res

    wrapper.cache_clear = cache.clear  # type: ignore[attr-defined]
    return wrapper

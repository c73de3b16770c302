"""
Test-friendly helpers for caching.

A few values in this package are pure functions of small parameter tuples and
are asked for over and over during sweeps, e.g. the multiplicity cap for a
given (gamma, epsilon). We want them memoized, but we also want tests to start
from a clean slate so that a bug in one cached computation can't hide behind a
value computed by an earlier test. Sweeps log the hit counts of every cache
at DEBUG level through ``lru_cache_info``.
"""
from __future__ import annotations

import functools
from collections.abc import Callable
from typing import Any

# Registered wrappers, in decoration order.
_lru_cached_fns: list[functools._lru_cache_wrapper[Any]] = []


def lru_cache(*args: Any, **kwargs: Any) -> Callable[[Callable[..., Any]], functools._lru_cache_wrapper[Any]]:
    """
    functools.lru_cache, registered so that every cache can be cleared or inspected later.
    """
    def decorator(fn: Callable[..., Any]) -> functools._lru_cache_wrapper[Any]:
        wrapped_fn = functools.lru_cache(*args, **kwargs)(fn)
        _lru_cached_fns.append(wrapped_fn)
        return wrapped_fn
    return decorator


def clear_lru_caches() -> None:
    """
    Clear every cache created through ``lru_cache``.
    """
    for fn in _lru_cached_fns:
        fn.cache_clear()


def lru_cache_info() -> dict[str, functools._CacheInfo]:
    """
    Hits, misses and current size of every registered cache, by qualified name.
    """
    return {f"{fn.__module__}.{fn.__qualname__}": fn.cache_info() for fn in _lru_cached_fns}

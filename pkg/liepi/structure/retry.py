"""Deterministic retries for computations that sample a generic element."""

import logging
from functools import wraps
from typing import Callable, Optional, Set, Type

logger = logging.getLogger(__name__)

DEFAULT_SEED_ATTEMPTS = 8


class UnluckySeed(Exception):
    """The sampled element was not generic enough; another seed may succeed."""


def with_seed_retries(
    max_attempts: int = DEFAULT_SEED_ATTEMPTS,
    retryable_errors: Optional[Set[Type[Exception]]] = None,
    on_exhausted: Optional[Callable[[Exception], Exception]] = None,
):
    """
    Decorator calling func(*args, seed=k, **kwargs) for k = 0, 1, ... until it succeeds.

    Args:
        max_attempts: Number of seeds tried before giving up
        retryable_errors: Exception types that trigger the next seed
        on_exhausted: Maps the last failure to the exception raised at the end
    """
    if retryable_errors is None:
        retryable_errors = {UnluckySeed}

    def decorator(func):
        @wraps(func)
        def wrapper(*args, **kwargs):
            last_exception: Optional[Exception] = None
            for seed in range(max_attempts):
                try:
                    return func(*args, seed=seed, **kwargs)
                except Exception as e:
                    if not any(isinstance(e, error_type) for error_type in retryable_errors):
                        raise
                    last_exception = e
                    if seed + 1 < max_attempts:
                        logger.debug(f"{func.__name__} seed {seed} rejected: {e}. Retrying")
                    else:
                        logger.warning(f"{func.__name__} failed for all {max_attempts} seeds: {e}")

            if on_exhausted is not None and last_exception is not None:
                raise on_exhausted(last_exception) from last_exception
            raise last_exception  # type: ignore[misc]

        return wrapper

    return decorator

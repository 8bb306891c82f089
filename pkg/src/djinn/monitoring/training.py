import time
from functools import wraps
from typing import Any, Callable, TypeVar

from djinn.core.monitoring import NETWORKS_TRAINED, TRAINING_DURATION, TREES_FITTED

F = TypeVar("F", bound=Callable[..., Any])


def track_training(scheme: str) -> Callable[[F], F]:
    """Decorator to track network training metrics."""
    def decorator(func: F) -> F:
        @wraps(func)
        def wrapper(*args: Any, **kwargs: Any) -> Any:
            start_time = time.perf_counter()
            try:
                result = func(*args, **kwargs)
                NETWORKS_TRAINED.labels(scheme=scheme).inc()
                return result
            finally:
                TRAINING_DURATION.labels(scheme=scheme).observe(
                    time.perf_counter() - start_time
                )
        return wrapper  # type: ignore[return-value]
    return decorator


def track_tree_fit(func: F) -> F:
    """Decorator counting fitted trees by task (read from the result)."""
    @wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        tree = func(*args, **kwargs)
        TREES_FITTED.labels(task=tree.task.value).inc()
        return tree
    return wrapper  # type: ignore[return-value]

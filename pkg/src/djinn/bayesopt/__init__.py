from .acquisition import expected_improvement
from .gp import GaussianProcess
from .optimizer import SearchSpace, Trial, minimize, optimize

__all__ = [
    "expected_improvement",
    "GaussianProcess",
    "SearchSpace",
    "Trial",
    "minimize",
    "optimize",
]

import numpy as np
from numpy.typing import NDArray
from scipy import stats


def expected_improvement(
    mean: NDArray[np.float64], std: NDArray[np.float64], best: float, xi: float = 0.0
) -> NDArray[np.float64]:
    """Expected amount by which each candidate falls below `best` (minimization)."""
    mean = np.asarray(mean, dtype=np.float64)
    std = np.asarray(std, dtype=np.float64)
    improvement = best - mean - xi
    ei = np.maximum(improvement, 0.0)
    positive = std > 0
    z = improvement[positive] / std[positive]
    ei[positive] = improvement[positive] * stats.norm.cdf(z) + std[positive] * stats.norm.pdf(z)
    return np.maximum(ei, 0.0)

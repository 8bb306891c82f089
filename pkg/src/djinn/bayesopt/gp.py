"""
Gaussian-process regression with a squared-exponential kernel, used as the
surrogate of the architecture search.
"""
from __future__ import annotations

import itertools
import math
from typing import Optional

import numpy as np
from numpy.typing import NDArray
from scipy import linalg

LENGTH_SCALES = (0.05, 0.1, 0.2, 0.3, 0.5, 1.0, 2.0)
SIGNAL_VARIANCES = (0.25, 0.5, 1.0, 2.0, 4.0)


def squared_exponential(
    a: NDArray[np.float64], b: NDArray[np.float64], length_scale: float, signal_variance: float
) -> NDArray[np.float64]:
    sq = np.sum(a**2, axis=1)[:, None] + np.sum(b**2, axis=1)[None, :] - 2.0 * a @ b.T
    return signal_variance * np.exp(-0.5 * np.maximum(sq, 0.0) / length_scale**2)


class GaussianProcess:
    """
    Targets are standardized before fitting. Kernel hyper-parameters are the
    grid point with the highest log marginal likelihood.
    """

    def __init__(self, noise: float = 1e-6) -> None:
        self.noise = noise
        self.length_scale: Optional[float] = None
        self.signal_variance: Optional[float] = None

    def _factor(
        self, length_scale: float, signal_variance: float
    ) -> tuple[NDArray[np.float64], NDArray[np.float64], float]:
        k = squared_exponential(self.x, self.x, length_scale, signal_variance)
        k[np.diag_indices_from(k)] += self.noise
        chol = linalg.cholesky(k, lower=True)
        alpha = linalg.cho_solve((chol, True), self.z)
        log_ml = (
            -0.5 * float(self.z @ alpha)
            - float(np.sum(np.log(np.diag(chol))))
            - 0.5 * self.z.size * math.log(2.0 * math.pi)
        )
        return chol, alpha, log_ml

    def fit(self, x: NDArray[np.float64], y: NDArray[np.float64]) -> GaussianProcess:
        """Raises numpy.linalg.LinAlgError when no grid point gives a usable factor."""
        self.x = np.asarray(x, dtype=np.float64)
        y = np.asarray(y, dtype=np.float64).ravel()
        self.y_mean = float(y.mean())
        self.y_std = float(y.std()) or 1.0
        self.z = (y - self.y_mean) / self.y_std

        best = None
        for length_scale, signal_variance in itertools.product(LENGTH_SCALES, SIGNAL_VARIANCES):
            try:
                chol, alpha, log_ml = self._factor(length_scale, signal_variance)
            except linalg.LinAlgError:
                continue
            if not np.isfinite(log_ml):
                continue
            if best is None or log_ml > best[0]:
                best = (log_ml, length_scale, signal_variance, chol, alpha)
        if best is None:
            raise linalg.LinAlgError("kernel matrix is not positive definite for any grid point")
        _, self.length_scale, self.signal_variance, self.chol, self.alpha = best
        return self

    def predict(self, x: NDArray[np.float64]) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
        """Posterior mean and standard deviation in the original target units."""
        x = np.asarray(x, dtype=np.float64)
        k_star = squared_exponential(x, self.x, self.length_scale, self.signal_variance)
        mean = k_star @ self.alpha
        v = linalg.solve_triangular(self.chol, k_star.T, lower=True)
        var = np.maximum(self.signal_variance - np.sum(v**2, axis=0), 0.0)
        return self.y_mean + self.y_std * mean, self.y_std * np.sqrt(var)

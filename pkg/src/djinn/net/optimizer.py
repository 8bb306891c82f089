from __future__ import annotations

import numpy as np
from numpy.typing import NDArray


class Adam:
    """Bias-corrected Adam; one moment pair per parameter array, updated in place."""

    def __init__(
        self,
        parameters: list[NDArray[np.float64]],
        learning_rate: float,
        beta1: float = 0.9,
        beta2: float = 0.999,
        epsilon: float = 1e-8,
    ) -> None:
        self.parameters = parameters
        self.learning_rate = learning_rate
        self.beta1 = beta1
        self.beta2 = beta2
        self.epsilon = epsilon
        self.m = [np.zeros_like(p) for p in parameters]
        self.v = [np.zeros_like(p) for p in parameters]
        self.t = 0

    def step(self, gradients: list[NDArray[np.float64]]) -> None:
        self.t += 1
        correction1 = 1.0 - self.beta1**self.t
        correction2 = 1.0 - self.beta2**self.t
        for p, g, m, v in zip(self.parameters, gradients, self.m, self.v):
            m *= self.beta1
            m += (1.0 - self.beta1) * g
            v *= self.beta2
            v += (1.0 - self.beta2) * g**2
            p -= self.learning_rate * (m / correction1) / (np.sqrt(v / correction2) + self.epsilon)

"""
Cost functions on a batch: mean squared error summed over outputs, and
softmax cross-entropy computed from logits.
"""
from enum import Enum

import numpy as np
from numpy.typing import NDArray

from djinn.core.exceptions import TrainingError


class LossKind(str, Enum):
    MSE = "mse"
    SOFTMAX_XENT = "softmax_xent"


def softmax(logits: NDArray[np.float64]) -> NDArray[np.float64]:
    shifted = logits - logits.max(axis=1, keepdims=True)
    exp = np.exp(shifted)
    return exp / exp.sum(axis=1, keepdims=True)


def mse(outputs: NDArray[np.float64], targets: NDArray[np.float64]) -> tuple[float, NDArray[np.float64]]:
    """Cost and d(cost)/d(outputs)."""
    residual = outputs - targets
    n = outputs.shape[0]
    cost = float(np.sum(residual**2) / n)
    return cost, 2.0 * residual / n


def softmax_xent(
    logits: NDArray[np.float64], labels: NDArray[np.int64]
) -> tuple[float, NDArray[np.float64]]:
    """Cost and d(cost)/d(logits); stabilized by subtracting the max logit."""
    n = logits.shape[0]
    shifted = logits - logits.max(axis=1, keepdims=True)
    log_norm = np.log(np.exp(shifted).sum(axis=1))
    rows = np.arange(n)
    cost = float(np.mean(log_norm - shifted[rows, labels]))
    grad = softmax(logits)
    grad[rows, labels] -= 1.0
    return cost, grad / n


def evaluate_loss(
    kind: LossKind, outputs: NDArray[np.float64], targets: NDArray[np.float64]
) -> tuple[float, NDArray[np.float64]]:
    kind = LossKind(kind)
    if kind is LossKind.MSE:
        return mse(outputs, targets)
    if kind is LossKind.SOFTMAX_XENT:
        labels = np.asarray(targets).reshape(-1).astype(np.int64)
        return softmax_xent(outputs, labels)
    raise TrainingError(f"unknown loss {kind!r}")

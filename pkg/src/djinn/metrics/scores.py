"""
Test-set scores: MSE, MAE and explained variance for regression; macro
recall, macro precision and accuracy for classification.
"""
from __future__ import annotations

from typing import Dict

import numpy as np
from numpy.typing import ArrayLike

from djinn.core.exceptions import MetricError

REGRESSION_METRICS = ("mse", "mae", "ev")
CLASSIFICATION_METRICS = ("recall", "precision", "accuracy")


def _as_columns(values: ArrayLike) -> np.ndarray:
    arr = np.asarray(values, dtype=np.float64)
    return arr.reshape(-1, 1) if arr.ndim == 1 else arr


def regression_metrics(y_true: ArrayLike, y_pred: ArrayLike) -> Dict[str, float]:
    """Each metric is computed per output column and averaged uniformly."""
    truth, pred = _as_columns(y_true), _as_columns(y_pred)
    if truth.shape != pred.shape:
        raise MetricError(f"truth has shape {truth.shape} but predictions have {pred.shape}")
    if truth.shape[0] < 2:
        raise MetricError(f"need at least 2 samples, got {truth.shape[0]}")
    residual = truth - pred
    truth_var = truth.var(axis=0)
    if np.any(truth_var == 0):
        flat = [int(c) for c in np.flatnonzero(truth_var == 0)]
        raise MetricError(f"explained variance undefined: zero target variance in output(s) {flat}")
    return {
        "mse": float(np.mean(residual**2)),
        "mae": float(np.mean(np.abs(residual))),
        "ev": float(np.mean(1.0 - residual.var(axis=0) / truth_var)),
    }


def classification_metrics(y_true: ArrayLike, y_pred: ArrayLike, n_classes: int) -> Dict[str, float]:
    """Macro averages run over all n_classes; a class with a zero denominator scores 0."""
    truth = np.asarray(y_true).reshape(-1).astype(np.int64)
    pred = np.asarray(y_pred).reshape(-1).astype(np.int64)
    if truth.size == 0:
        raise MetricError("cannot score an empty prediction set")
    if truth.shape != pred.shape:
        raise MetricError(f"{truth.size} true labels but {pred.size} predictions")
    for name, labels in (("truth", truth), ("predictions", pred)):
        if labels.min() < 0 or labels.max() >= n_classes:
            raise MetricError(f"{name} hold labels outside [0, {n_classes})")

    confusion = np.zeros((n_classes, n_classes), dtype=np.int64)
    np.add.at(confusion, (truth, pred), 1)
    hits = np.diag(confusion).astype(np.float64)
    actual = confusion.sum(axis=1)
    predicted = confusion.sum(axis=0)
    recall = np.divide(hits, actual, out=np.zeros(n_classes), where=actual > 0)
    precision = np.divide(hits, predicted, out=np.zeros(n_classes), where=predicted > 0)
    return {
        "recall": float(recall.mean()),
        "precision": float(precision.mean()),
        "accuracy": float(hits.sum() / truth.size),
    }

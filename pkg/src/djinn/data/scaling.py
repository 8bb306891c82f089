"""
Per-column min/max scaling to (0, 1), fitted on training rows only. Features
are always scaled; regression targets are scaled for training and mapped back
before scoring.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np
from numpy.typing import NDArray

from djinn.core.exceptions import DataError
from djinn.data.dataset import Dataset, Task


@dataclass(frozen=True)
class ScalingParams:
    min: NDArray[np.float64]
    max: NDArray[np.float64]

    def __post_init__(self) -> None:
        lo = np.asarray(self.min, dtype=np.float64).ravel()
        hi = np.asarray(self.max, dtype=np.float64).ravel()
        if lo.shape != hi.shape:
            raise DataError(f"min has {lo.size} entries but max has {hi.size}")
        if np.any(hi < lo):
            raise DataError("scaling max must be >= min for every feature")
        object.__setattr__(self, "min", lo)
        object.__setattr__(self, "max", hi)

    @property
    def n_features(self) -> int:
        return int(self.min.size)

    @property
    def span(self) -> NDArray[np.float64]:
        return self.max - self.min

    def to_dict(self) -> dict[str, list[float]]:
        return {"min": self.min.tolist(), "max": self.max.tolist()}

    @classmethod
    def from_dict(cls, payload: dict[str, list[float]]) -> ScalingParams:
        return cls(min=np.asarray(payload["min"]), max=np.asarray(payload["max"]))


def _as_matrix(features: NDArray[np.float64]) -> NDArray[np.float64]:
    x = np.asarray(features, dtype=np.float64)
    if x.ndim == 1:
        x = x.reshape(-1, 1)
    return x


def fit_scaler(train_features: NDArray[np.float64]) -> ScalingParams:
    x = _as_matrix(train_features)
    if x.shape[0] == 0:
        raise DataError("cannot fit a scaler on zero rows")
    return ScalingParams(min=x.min(axis=0), max=x.max(axis=0))


def apply_scaler(features: NDArray[np.float64], params: ScalingParams) -> NDArray[np.float64]:
    """
    x' = (x - min) / (max - min). Constant columns map to 0 and values outside
    the fitted range are not clipped.
    """
    x = _as_matrix(features)
    if x.shape[1] != params.n_features:
        raise DataError(
            f"scaler fitted on {params.n_features} features, got {x.shape[1]}"
        )
    span = params.span
    degenerate = span == 0
    safe = np.where(degenerate, 1.0, span)
    scaled = (x - params.min) / safe
    scaled[:, degenerate] = 0.0
    return scaled


def invert_scaler(scaled: NDArray[np.float64], params: ScalingParams) -> NDArray[np.float64]:
    """Inverse affine map; degenerate columns come back as their constant."""
    x = _as_matrix(scaled)
    if x.shape[1] != params.n_features:
        raise DataError(
            f"scaler fitted on {params.n_features} features, got {x.shape[1]}"
        )
    return x * params.span + params.min


def fit_dataset_scalers(dataset: Dataset) -> tuple[ScalingParams, Optional[ScalingParams]]:
    """Feature scaler, plus a target scaler for regression datasets."""
    targets = fit_scaler(dataset.targets) if dataset.task is Task.REGRESSION else None
    return fit_scaler(dataset.features), targets


def scale_dataset(
    dataset: Dataset, scaler: ScalingParams, target_scaler: Optional[ScalingParams] = None
) -> Dataset:
    targets = None if target_scaler is None else apply_scaler(dataset.targets, target_scaler)
    return dataset.replace(features=apply_scaler(dataset.features, scaler), targets=targets)

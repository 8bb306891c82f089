"""
In-memory tabular dataset shared by every experiment.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Sequence

import numpy as np
from numpy.typing import NDArray

from djinn.core.exceptions import DataError


class Task(str, Enum):
    REGRESSION = "regression"
    CLASSIFICATION = "classification"


@dataclass(frozen=True)
class Dataset:
    """
    Feature matrix plus targets.

    Regression targets are an (n_samples, n_targets) float matrix. Classification
    targets are a single column of class indices in [0, n_classes).
    """
    features: NDArray[np.float64]
    targets: NDArray[np.float64]
    task: Task
    n_classes: int = 0
    feature_names: tuple[str, ...] = ()
    target_names: tuple[str, ...] = ()
    class_labels: tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        features = np.asarray(self.features, dtype=np.float64)
        targets = np.asarray(self.targets, dtype=np.float64)
        if targets.ndim == 1:
            targets = targets.reshape(-1, 1)
        if features.ndim != 2:
            raise DataError(f"features must be a matrix, got shape {features.shape}")
        if features.shape[0] < 2:
            raise DataError(f"need at least 2 samples, got {features.shape[0]}")
        if features.shape[0] != targets.shape[0]:
            raise DataError(
                f"features have {features.shape[0]} rows but targets have {targets.shape[0]}"
            )
        if not np.all(np.isfinite(features)):
            raise DataError("features contain NaN or Inf")
        if not np.all(np.isfinite(targets)):
            raise DataError("targets contain NaN or Inf")

        task = Task(self.task)
        if task is Task.CLASSIFICATION:
            if targets.shape[1] != 1:
                raise DataError("classification needs exactly one target column")
            if self.n_classes < 1:
                raise DataError("classification needs n_classes >= 1")
            labels = targets[:, 0]
            if np.any(labels != np.round(labels)) or labels.min() < 0 or labels.max() >= self.n_classes:
                raise DataError(f"class indices must be integers in [0, {self.n_classes})")

        features.setflags(write=False)
        targets.setflags(write=False)
        object.__setattr__(self, "features", features)
        object.__setattr__(self, "targets", targets)
        object.__setattr__(self, "task", task)
        if not self.feature_names:
            names = tuple(f"x{i}" for i in range(features.shape[1]))
            object.__setattr__(self, "feature_names", names)
        if not self.target_names:
            names = tuple(f"y{i}" for i in range(targets.shape[1]))
            object.__setattr__(self, "target_names", names)

    @property
    def n_samples(self) -> int:
        return int(self.features.shape[0])

    @property
    def n_features(self) -> int:
        return int(self.features.shape[1])

    @property
    def n_targets(self) -> int:
        return int(self.targets.shape[1])

    @property
    def n_outputs(self) -> int:
        """Output-layer width: one neuron per class or per regression target."""
        return self.n_classes if self.task is Task.CLASSIFICATION else self.n_targets

    @property
    def labels(self) -> NDArray[np.int64]:
        if self.task is not Task.CLASSIFICATION:
            raise DataError("labels are only defined for classification datasets")
        return self.targets[:, 0].astype(np.int64)

    def subset(self, indices: Sequence[int] | NDArray[np.int64]) -> Dataset:
        idx = np.asarray(indices, dtype=np.int64)
        return self.replace(features=self.features[idx], targets=self.targets[idx])

    def replace(
        self,
        features: Optional[NDArray[np.float64]] = None,
        targets: Optional[NDArray[np.float64]] = None,
    ) -> Dataset:
        return Dataset(
            features=self.features if features is None else features,
            targets=self.targets if targets is None else targets,
            task=self.task,
            n_classes=self.n_classes,
            feature_names=self.feature_names,
            target_names=self.target_names,
            class_labels=self.class_labels,
        )

"""
Seeded train/test permutations. Permutation i is an independent 80/20-style
shuffle driven by seed + i, so every model sees the same folds.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from djinn.core.exceptions import DataError

IndexArray = NDArray[np.int64]

# Dataset rejects fewer rows than this
MIN_FOLD_ROWS = 2


@dataclass(frozen=True)
class SplitPlan:
    permutations: tuple[tuple[IndexArray, IndexArray], ...]
    seed: int
    test_fraction: float

    def __len__(self) -> int:
        return len(self.permutations)

    def to_dict(self) -> dict[str, object]:
        return {
            "seed": self.seed,
            "test_fraction": self.test_fraction,
            "permutations": [
                {"train": train.tolist(), "test": test.tolist()}
                for train, test in self.permutations
            ],
        }

    @classmethod
    def from_dict(cls, payload: dict) -> SplitPlan:
        perms = tuple(
            (np.asarray(p["train"], dtype=np.int64), np.asarray(p["test"], dtype=np.int64))
            for p in payload["permutations"]
        )
        return cls(
            permutations=perms,
            seed=int(payload["seed"]),
            test_fraction=float(payload["test_fraction"]),
        )


def holdout_size(n_samples: int, test_fraction: float) -> int:
    """round(test_fraction * n), half up, clamped to [1, n - 1]."""
    n_test = int(math.floor(test_fraction * n_samples + 0.5))
    return min(max(n_test, 1), n_samples - 1)


def make_splits(
    n_samples: int, n_permutations: int, test_fraction: float, seed: int
) -> SplitPlan:
    if n_samples < 2:
        raise DataError(f"need at least 2 samples to split, got {n_samples}")
    if not 0.0 < test_fraction < 1.0:
        raise DataError(f"test_fraction must lie in (0, 1), got {test_fraction}")
    if n_permutations < 1:
        raise DataError(f"n_permutations must be >= 1, got {n_permutations}")

    n_test = holdout_size(n_samples, test_fraction)
    permutations = []
    for i in range(n_permutations):
        order = np.random.default_rng(seed + i).permutation(n_samples)
        test = np.sort(order[:n_test]).astype(np.int64)
        train = np.sort(order[n_test:]).astype(np.int64)
        permutations.append((train, test))
    return SplitPlan(permutations=tuple(permutations), seed=seed, test_fraction=test_fraction)


def check_fold_sizes(plan: SplitPlan, minimum: int = MIN_FOLD_ROWS) -> None:
    """Both sides of every permutation must hold enough rows to form a Dataset."""
    for train, test in plan.permutations:
        if train.size < minimum or test.size < minimum:
            raise DataError(
                f"each fold needs at least {minimum} rows, but this split gives "
                f"{train.size} train and {test.size} test rows; add samples or "
                f"change test_fraction"
            )

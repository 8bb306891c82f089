"""
Random-forest ensembles of CART trees.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

import numpy as np
from joblib import Parallel, delayed
from loguru import logger
from numpy.typing import NDArray

from djinn.core.exceptions import TreeError
from djinn.data.dataset import Task
from djinn.tree.cart import DecisionTree, fit_tree

# second entropy word separating the bootstrap stream from the split stream
_BOOTSTRAP_STREAM = 1


@dataclass(frozen=True, eq=False)
class Forest:
    trees: tuple[DecisionTree, ...]
    seeds: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.trees:
            raise TreeError("a forest needs at least one tree")
        if len(self.trees) != len(self.seeds):
            raise TreeError(f"{len(self.trees)} trees but {len(self.seeds)} seeds")
        first = self.trees[0]
        for tree in self.trees[1:]:
            if tree.n_features != first.n_features or tree.task is not first.task:
                raise TreeError("all trees in a forest must share n_features and task")

    def __len__(self) -> int:
        return len(self.trees)

    @property
    def task(self) -> Task:
        return self.trees[0].task

    @property
    def n_features(self) -> int:
        return self.trees[0].n_features


def bootstrap_indices(n_samples: int, seed: int) -> NDArray[np.int64]:
    rng = np.random.default_rng((seed, _BOOTSTRAP_STREAM))
    return rng.integers(0, n_samples, size=n_samples)


def _fit_member(
    x: NDArray[np.float64],
    y: NDArray[np.float64],
    task: Task,
    seed: int,
    max_depth: Optional[int],
    min_leaf: int,
    max_features: Union[str, int, None],
    bootstrap: bool,
    n_classes: Optional[int],
) -> DecisionTree:
    if bootstrap:
        idx = bootstrap_indices(x.shape[0], seed)
        x, y = x[idx], y[idx]
    return fit_tree(
        x,
        y,
        task,
        max_depth=max_depth,
        min_leaf=min_leaf,
        max_features=max_features,
        rng_seed=seed,
        n_classes=n_classes,
    )


def fit_forest(
    features: NDArray[np.float64],
    targets: NDArray[np.float64],
    task: Union[Task, str],
    n_trees: int,
    max_depth: Optional[int],
    min_leaf: int = 1,
    rng_seed: int = 0,
    bootstrap: bool = True,
    max_features: Union[str, int, None] = "auto",
    n_classes: Optional[int] = None,
    n_jobs: int = 1,
) -> Forest:
    """
    Tree i is grown on a bootstrap sample drawn with seed rng_seed + i and uses
    the same seed for per-split feature subsampling.
    """
    if n_trees < 1:
        raise TreeError(f"n_trees must be >= 1, got {n_trees}")
    task = Task(task)
    x = np.asarray(features, dtype=np.float64)
    y = np.asarray(targets, dtype=np.float64)
    if y.ndim == 1:
        y = y.reshape(-1, 1)
    if task is Task.CLASSIFICATION and n_classes is None:
        n_classes = int(y.max()) + 1

    seeds = tuple(rng_seed + i for i in range(n_trees))
    jobs = (
        delayed(_fit_member)(x, y, task, seed, max_depth, min_leaf, max_features, bootstrap, n_classes)
        for seed in seeds
    )
    trees = Parallel(n_jobs=n_jobs, prefer="threads")(jobs)
    logger.debug(f"Fitted forest of {n_trees} trees (seeds {seeds[0]}..{seeds[-1]})")
    return Forest(trees=tuple(trees), seeds=seeds)

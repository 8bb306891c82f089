"""
Non-informative initializations sharing a DJINN architecture: dense Xavier
weights everywhere, or the same number of nonzero weights per layer placed at
random with every neuron keeping at least one incoming and outgoing weight.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from loguru import logger
from numpy.typing import NDArray

from djinn.core.exceptions import BudgetError
from djinn.mapping.architecture import Architecture, xavier_sigma
from djinn.mapping.initializer import InitializedNetwork
from djinn.mapping.stats import InitStats


@dataclass(frozen=True)
class SparsityBudget:
    """Nonzero weight count per layer, W^1 first."""
    counts: tuple[int, ...]

    @classmethod
    def from_init_stats(cls, stats: InitStats, architecture: Architecture) -> SparsityBudget:
        """
        Copy a mapped network's counts. Layers below the max(rows, cols) cover
        floor (free neurons leave rows empty) are raised to the floor.
        """
        shapes = architecture.layer_shapes()
        if len(shapes) != len(stats.nonzero):
            raise BudgetError(f"stats cover {len(stats.nonzero)} layers, architecture has {len(shapes)}")
        counts = []
        for layer, (count, (rows, cols)) in enumerate(zip(stats.nonzero, shapes), start=1):
            floor = max(rows, cols)
            if count < floor:
                logger.warning(
                    f"Layer {layer} budget {count} is below the cover floor {floor} for "
                    f"{rows}x{cols}; raising it to {floor}"
                )
                count = floor
            counts.append(min(count, rows * cols))
        return cls(counts=tuple(counts))

    def check(self, architecture: Architecture) -> None:
        shapes = architecture.layer_shapes()
        if len(shapes) != len(self.counts):
            raise BudgetError(f"budget covers {len(self.counts)} layers, architecture has {len(shapes)}")
        for layer, (count, (rows, cols)) in enumerate(zip(self.counts, shapes), start=1):
            if count < max(rows, cols):
                raise BudgetError(
                    f"layer {layer} ({rows}x{cols}) needs at least {max(rows, cols)} "
                    f"nonzero weights, budget is {count}"
                )
            if count > rows * cols:
                raise BudgetError(f"layer {layer} ({rows}x{cols}) cannot hold {count} nonzero weights")


def _empty_unity(architecture: Architecture) -> list[NDArray[np.bool_]]:
    return [np.zeros(shape, dtype=bool) for shape in architecture.layer_shapes()]


def _biases(architecture: Architecture, rng: np.random.Generator) -> list[NDArray[np.float64]]:
    return [
        rng.normal(0.0, xavier_sigma(cols, rows), size=rows)
        for rows, cols in architecture.layer_shapes()
    ]


def random_dense_init(architecture: Architecture, rng_seed: int) -> InitializedNetwork:
    rng = np.random.default_rng(rng_seed)
    weights = [
        rng.normal(0.0, xavier_sigma(cols, rows), size=(rows, cols))
        for rows, cols in architecture.layer_shapes()
    ]
    return InitializedNetwork(
        architecture=architecture,
        weights=weights,
        biases=_biases(architecture, rng),
        unity=_empty_unity(architecture),
    )


def sparse_mask(rows: int, cols: int, count: int, rng: np.random.Generator) -> NDArray[np.bool_]:
    """
    Random cover first: the longer dimension is shuffled and assigned cyclically
    over the shorter one, so every row and column gets one cell. The remaining
    count is drawn uniformly from the empty cells.
    """
    mask = np.zeros((rows, cols), dtype=bool)
    if cols >= rows:
        for k, col in enumerate(rng.permutation(cols)):
            mask[k % rows, col] = True
    else:
        for k, row in enumerate(rng.permutation(rows)):
            mask[row, k % cols] = True
    extra = count - int(mask.sum())
    if extra > 0:
        free = np.flatnonzero(~mask.ravel())
        mask.flat[rng.choice(free, size=extra, replace=False)] = True
    return mask


def random_sparse_init(
    architecture: Architecture, budget: SparsityBudget, rng_seed: int
) -> InitializedNetwork:
    budget.check(architecture)
    rng = np.random.default_rng(rng_seed)
    weights = []
    for count, (rows, cols) in zip(budget.counts, architecture.layer_shapes()):
        mask = sparse_mask(rows, cols, count, rng)
        w = np.zeros((rows, cols))
        w[mask] = rng.normal(0.0, xavier_sigma(cols, rows), size=count)
        weights.append(w)
    return InitializedNetwork(
        architecture=architecture,
        weights=weights,
        biases=_biases(architecture, rng),
        unity=_empty_unity(architecture),
    )

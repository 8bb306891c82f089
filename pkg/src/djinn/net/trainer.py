"""
Mini-batch Adam training with per-epoch cost tracking.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Union

import numpy as np
import pandas as pd
from loguru import logger
from numpy.typing import NDArray

from djinn.core.exceptions import DivergenceError, TrainingError
from djinn.data.dataset import Dataset, Task
from djinn.monitoring import track_training
from djinn.net.losses import LossKind, evaluate_loss
from djinn.net.network import Network, forward, loss_outputs_and_gradient
from djinn.net.optimizer import Adam
from djinn.schemas.config import TrainingConfig


@dataclass
class CostHistory:
    """
    cost: mean training batch cost per epoch. scaled_cost: the same batches'
    MSE with targets divided by their training range. test_cost: cost on an
    evaluation set after each epoch.
    """
    cost: list[float] = field(default_factory=list)
    scaled_cost: Optional[list[float]] = None
    test_cost: Optional[list[float]] = None

    def __len__(self) -> int:
        return len(self.cost)

    def to_frame(self) -> pd.DataFrame:
        frame = pd.DataFrame({"epoch": np.arange(1, len(self.cost) + 1), "cost": self.cost})
        if self.scaled_cost is not None:
            frame["scaled_cost"] = self.scaled_cost
        if self.test_cost is not None:
            frame["test_cost"] = self.test_cost
        return frame

    def to_csv(self, path: Union[str, Path]) -> None:
        self.to_frame().to_csv(path, index=False, float_format="%.10g")


def _eval_cost(net: Network, dataset: Dataset, loss: LossKind) -> float:
    cost, _ = evaluate_loss(loss, forward(net, dataset.features), dataset.targets)
    return cost


def _fit(
    net: Network,
    dataset_train: Dataset,
    config: TrainingConfig,
    loss: LossKind,
    target_range: Optional[NDArray[np.float64]],
    eval_set: Optional[Dataset],
) -> CostHistory:
    x, y = dataset_train.features, dataset_train.targets
    n = dataset_train.n_samples
    optimizer = Adam(
        net.parameters(),
        config.learning_rate,
        beta1=config.beta1,
        beta2=config.beta2,
        epsilon=config.epsilon,
    )
    rng = np.random.default_rng(config.shuffle_seed)
    history = CostHistory(
        scaled_cost=[] if target_range is not None else None,
        test_cost=[] if eval_set is not None else None,
    )
    if target_range is not None:
        span = np.where(target_range == 0, 1.0, target_range)

    for epoch in range(1, config.epochs + 1):
        order = rng.permutation(n)
        costs = []
        scaled = []
        for batch, start in enumerate(range(0, n, config.batch_size)):
            idx = order[start : start + config.batch_size]
            cost, outputs, grads = loss_outputs_and_gradient(net, x[idx], y[idx], loss)
            if not np.isfinite(cost):
                raise DivergenceError(epoch, batch, cost)
            if target_range is not None:
                scaled.append(float(np.mean(((outputs - y[idx]) / span) ** 2)))
            optimizer.step(grads.as_list())
            costs.append(cost)
        if not net.is_finite():
            raise DivergenceError(epoch, batch, None)

        history.cost.append(float(np.mean(costs)))
        if history.scaled_cost is not None:
            history.scaled_cost.append(float(np.mean(scaled)))
        if history.test_cost is not None:
            history.test_cost.append(_eval_cost(net, eval_set, loss))  # type: ignore[arg-type]
        logger.trace(f"epoch {epoch}/{config.epochs} cost={history.cost[-1]:.6g}")
    return history


def train(
    net: Network,
    dataset_train: Dataset,
    config: TrainingConfig,
    *,
    scheme: str = "djinn",
    target_range: Optional[NDArray[np.float64]] = None,
    eval_set: Optional[Dataset] = None,
) -> tuple[Network, CostHistory]:
    """
    Train a copy of `net`. Rows are reshuffled every epoch from one generator
    seeded with config.shuffle_seed; the last short batch is kept.
    """
    if config.batch_size > dataset_train.n_samples:
        raise TrainingError(
            f"batch_size {config.batch_size} exceeds the {dataset_train.n_samples} training rows"
        )
    if net.n_in != dataset_train.n_features or net.n_out != dataset_train.n_outputs:
        raise TrainingError(
            f"network maps {net.n_in}->{net.n_out} but data has "
            f"{dataset_train.n_features} features and {dataset_train.n_outputs} outputs"
        )
    if target_range is not None and dataset_train.task is Task.CLASSIFICATION:
        raise TrainingError("scaled cost tracking only applies to regression")

    loss = config.loss_for(dataset_train.task)
    trained = net.copy()
    history = track_training(scheme)(_fit)(
        trained,
        dataset_train,
        config,
        loss,
        None if target_range is None else np.asarray(target_range, dtype=np.float64),
        eval_set,
    )
    logger.debug(
        f"Trained {scheme} network {trained.widths}: cost {history.cost[0]:.6g} -> {history.cost[-1]:.6g}"
    )
    return trained, history

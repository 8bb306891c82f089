"""
DJINN ensembles against Bayesian-optimized dense networks of the same depth.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from loguru import logger
from numpy.typing import NDArray

from djinn.bayesopt.optimizer import SearchSpace, Trial, optimize
from djinn.data.dataset import Dataset, Task
from djinn.data.scaling import (
    ScalingParams,
    apply_scaler,
    fit_dataset_scalers,
    invert_scaler,
    scale_dataset,
)
from djinn.data.splits import SplitPlan
from djinn.metrics.report import attach_pvalues
from djinn.net.network import Network, predict
from djinn.schemas.config import SearchConfig, TrainingConfig, TreeConfig
from djinn.schemas.report import EvalReport
from djinn.services.ensemble_service import DjinnEnsemble, build_and_train
from djinn.services.evaluation_service import crossval_run


@dataclass(frozen=True, eq=False)
class SearchedModel:
    """Best network of one search, with the scalers of its training rows."""
    network: Network
    scaler: ScalingParams
    best: Trial
    trials: list[Trial] = field(default_factory=list)
    target_scaler: Optional[ScalingParams] = None

    @property
    def architectures(self) -> list[tuple[int, ...]]:
        return [tuple(self.best.widths)]

    def predict(self, features: NDArray[np.float64]) -> NDArray:
        outputs = predict(self.network, apply_scaler(features, self.scaler))
        if self.network.task is Task.CLASSIFICATION:
            return np.argmax(outputs, axis=1)
        if self.target_scaler is None:
            return outputs
        return invert_scaler(outputs, self.target_scaler)


def search_space_for(ensemble: DjinnEnsemble, search: SearchConfig) -> SearchSpace:
    """Depth of the deepest member; widths in [lower, 2 x widest DJINN layer] unless set."""
    architectures = ensemble.architectures
    n_layers = max(len(widths) for widths in architectures)
    upper = search.width_upper or 2 * max(max(widths) for widths in architectures)
    return SearchSpace.uniform(n_layers, search.width_lower, max(upper, search.width_lower))


def search_fold(
    train_part: Dataset,
    space: SearchSpace,
    training: TrainingConfig,
    search: SearchConfig,
    seed: int,
) -> SearchedModel:
    scaler, target_scaler = fit_dataset_scalers(train_part)
    scaled = scale_dataset(train_part, scaler, target_scaler)
    best, trials, network = optimize(scaled, space, search.budget, training, rng_seed=seed, search=search)
    return SearchedModel(
        network=network, scaler=scaler, best=best, trials=trials, target_scaler=target_scaler
    )


def compare_bayesopt(
    dataset: Dataset,
    plan: SplitPlan,
    n_trees: int,
    tree: TreeConfig,
    training: TrainingConfig,
    search: Optional[SearchConfig] = None,
    base_seed: int = 0,
    n_jobs: int = 1,
) -> tuple[list[EvalReport], list[list[Trial]]]:
    """
    Per permutation, the DJINN ensemble fixes the layer count and width bounds
    of the search that runs on the same training rows.
    """
    search = search or SearchConfig()
    djinn_models: list[DjinnEnsemble] = []

    def djinn_builder(train_part: Dataset, permutation: int) -> DjinnEnsemble:
        ensemble = build_and_train(train_part, n_trees, tree, training, base_seed=base_seed, n_jobs=n_jobs)
        djinn_models.append(ensemble)
        return ensemble

    def search_builder(train_part: Dataset, permutation: int) -> SearchedModel:
        space = search_space_for(djinn_models[permutation], search)
        logger.info(f"Searching {space.n_layers}-layer widths in [{space.lower[0]}, {space.upper[0]}]")
        return search_fold(train_part, space, training, search, base_seed + permutation)

    djinn_report, _ = crossval_run("djinn", djinn_builder, dataset, plan)
    bayes_report, searched = crossval_run("bayesopt", search_builder, dataset, plan)
    reports = [attach_pvalues(djinn_report, djinn_report), attach_pvalues(bayes_report, djinn_report)]
    return reports, [model.trials for model in searched]  # type: ignore[attr-defined]

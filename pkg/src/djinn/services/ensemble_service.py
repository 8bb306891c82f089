"""
Forest -> mapped networks -> trained networks, and ensemble prediction.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np
import pandas as pd
from joblib import Parallel, delayed
from loguru import logger
from numpy.typing import NDArray

from djinn.baselines.init import SparsityBudget, random_dense_init, random_sparse_init
from djinn.core.exceptions import ConfigurationError, MappingError, MetricError, TreeError
from djinn.data.dataset import Dataset, Task
from djinn.data.scaling import (
    ScalingParams,
    apply_scaler,
    fit_dataset_scalers,
    invert_scaler,
    scale_dataset,
)
from djinn.data.splits import SplitPlan
from djinn.mapping.initializer import InitializedNetwork, map_tree
from djinn.mapping.pruning import prune_dead_neurons
from djinn.mapping.stats import init_stats
from djinn.metrics.scores import regression_metrics
from djinn.net.losses import softmax
from djinn.net.network import Network, forward
from djinn.net.serialization import (
    network_from_schema,
    network_to_schema,
    scaler_from_schema,
    scaler_to_schema,
)
from djinn.net.trainer import CostHistory, train
from djinn.schemas.config import InitScheme, TrainingConfig, TreeConfig
from djinn.schemas.model import EnsembleSchema
from djinn.tree.cart import DecisionTree
from djinn.tree.forest import Forest, fit_forest
from djinn.tree.topology import analyze_topology


@dataclass(frozen=True, eq=False)
class DjinnEnsemble:
    """
    Trained members plus the scalers fitted on their training rows. Regression
    members output targets scaled by target_scaler.
    """
    members: tuple[Network, ...]
    member_seeds: tuple[int, ...]
    scaler: ScalingParams
    task: Task
    n_classes: int = 0
    scheme: InitScheme = InitScheme.DJINN
    histories: tuple[CostHistory, ...] = field(default=())
    target_scaler: Optional[ScalingParams] = None

    def __post_init__(self) -> None:
        if not self.members:
            raise ConfigurationError("an ensemble needs at least one member")
        if len(self.members) != len(self.member_seeds):
            raise ConfigurationError(f"{len(self.members)} members but {len(self.member_seeds)} seeds")
        first = self.members[0]
        for net in self.members[1:]:
            if net.n_in != first.n_in or net.n_out != first.n_out:
                raise ConfigurationError("ensemble members must share input and output widths")

    def __len__(self) -> int:
        return len(self.members)

    @property
    def architectures(self) -> list[tuple[int, ...]]:
        """Hidden widths of every member."""
        return [tuple(net.widths[1:-1]) for net in self.members]

    def head(self, n: int) -> DjinnEnsemble:
        """The ensemble of the first n members."""
        return DjinnEnsemble(
            members=self.members[:n],
            member_seeds=self.member_seeds[:n],
            scaler=self.scaler,
            task=self.task,
            n_classes=self.n_classes,
            scheme=self.scheme,
            histories=self.histories[:n],
            target_scaler=self.target_scaler,
        )

    def predict(self, features: NDArray[np.float64]) -> NDArray:
        return predict_ensemble(self, features)

    def to_schema(self) -> EnsembleSchema:
        return EnsembleSchema(
            task=self.task,
            n_classes=self.n_classes,
            scheme=self.scheme.value,
            member_seeds=list(self.member_seeds),
            scaler=scaler_to_schema(self.scaler),
            target_scaler=None if self.target_scaler is None else scaler_to_schema(self.target_scaler),
            members=[network_to_schema(net) for net in self.members],
        )

    @classmethod
    def from_schema(cls, schema: EnsembleSchema) -> DjinnEnsemble:
        return cls(
            members=tuple(network_from_schema(member)[0] for member in schema.members),
            member_seeds=tuple(schema.member_seeds),
            scaler=scaler_from_schema(schema.scaler),
            task=schema.task,
            n_classes=schema.n_classes,
            scheme=InitScheme(schema.scheme),
            target_scaler=None if schema.target_scaler is None else scaler_from_schema(schema.target_scaler),
        )


def map_member(tree: DecisionTree, index: int, seed: int, n_in: int, n_out: int) -> InitializedNetwork:
    """Topology, mapping and pruning of one forest member."""
    try:
        topology = analyze_topology(tree)
    except TreeError as exc:
        raise MappingError(f"ensemble member {index} (seed {seed}) cannot be mapped: {exc}") from exc
    return prune_dead_neurons(map_tree(tree, topology, n_in, n_out, seed))


def initialize_member(
    mapped: InitializedNetwork, scheme: InitScheme, seed: int
) -> InitializedNetwork:
    """Random schemes keep the pruned DJINN architecture and replace the weights."""
    if scheme is InitScheme.DJINN:
        return mapped
    if scheme is InitScheme.RANDOM_DENSE:
        return random_dense_init(mapped.architecture, seed)
    budget = SparsityBudget.from_init_stats(init_stats(mapped), mapped.architecture)
    return random_sparse_init(mapped.architecture, budget, seed)


def _train_member(
    tree: DecisionTree,
    index: int,
    seed: int,
    scaled_train: Dataset,
    training: TrainingConfig,
    scheme: InitScheme,
    target_range: Optional[NDArray[np.float64]],
    eval_set: Optional[Dataset],
) -> tuple[Network, CostHistory]:
    mapped = map_member(tree, index, seed, scaled_train.n_features, scaled_train.n_outputs)
    initial = initialize_member(mapped, scheme, seed).to_network(scaled_train.task)
    config = training.model_copy(update={"shuffle_seed": training.shuffle_seed + index})
    logger.debug(f"Member {index} ({scheme.value}, seed {seed}): widths {initial.widths}")
    return train(
        initial,
        scaled_train,
        config,
        scheme=scheme.value,
        target_range=target_range,
        eval_set=eval_set,
    )


def build_forest(
    scaled_train: Dataset, n_trees: int, tree: TreeConfig, base_seed: int, n_jobs: int = 1
) -> Forest:
    return fit_forest(
        scaled_train.features,
        scaled_train.targets,
        scaled_train.task,
        n_trees=n_trees,
        max_depth=tree.max_depth,
        min_leaf=tree.min_leaf,
        rng_seed=base_seed,
        bootstrap=tree.bootstrap,
        max_features=tree.max_features,
        n_classes=scaled_train.n_classes or None,
        n_jobs=n_jobs,
    )


def build_and_train(
    dataset_train: Dataset,
    n_trees: int,
    tree: TreeConfig,
    training: TrainingConfig,
    scheme: InitScheme = InitScheme.DJINN,
    base_seed: int = 0,
    n_jobs: int = 1,
    track_scaled_cost: bool = False,
    eval_set: Optional[Dataset] = None,
) -> DjinnEnsemble:
    """
    Member i uses seed base_seed + i for its tree, its weights and its
    network, and shuffle seed training.shuffle_seed + i. Regression members
    train on targets min/max scaled over dataset_train, so the cost curves are
    MSE in scaled units while predictions come back in target units.
    """
    scheme = InitScheme(scheme)
    scaler, target_scaler = fit_dataset_scalers(dataset_train)
    scaled = scale_dataset(dataset_train, scaler, target_scaler)
    scaled_eval = None
    if eval_set is not None:
        scaled_eval = scale_dataset(eval_set, scaler, target_scaler)
    target_range = None
    if track_scaled_cost and scaled.task is Task.REGRESSION:
        target_range = scaled.targets.max(axis=0) - scaled.targets.min(axis=0)

    forest = build_forest(scaled, n_trees, tree, base_seed, n_jobs)
    results = Parallel(n_jobs=n_jobs, prefer="threads")(
        delayed(_train_member)(
            member, index, seed, scaled, training, scheme, target_range, scaled_eval
        )
        for index, (member, seed) in enumerate(zip(forest.trees, forest.seeds))
    )
    ensemble = DjinnEnsemble(
        members=tuple(net for net, _ in results),
        member_seeds=forest.seeds,
        scaler=scaler,
        task=dataset_train.task,
        n_classes=dataset_train.n_classes,
        scheme=scheme,
        histories=tuple(history for _, history in results),
        target_scaler=target_scaler,
    )
    logger.info(
        f"Built {scheme.value} ensemble of {n_trees} members on {dataset_train.n_samples} rows"
    )
    return ensemble


def predict_proba_ensemble(ensemble: DjinnEnsemble, features: NDArray[np.float64]) -> NDArray[np.float64]:
    """Mean member softmax probabilities."""
    if ensemble.task is not Task.CLASSIFICATION:
        raise ConfigurationError("class probabilities need a classification ensemble")
    x = apply_scaler(features, ensemble.scaler)
    return np.mean([softmax(forward(net, x)) for net in ensemble.members], axis=0)


def predict_ensemble(ensemble: DjinnEnsemble, features: NDArray[np.float64]) -> NDArray:
    """
    Raw features in. Regression returns the mean member output; classification
    the argmax of the mean member probabilities.
    """
    if ensemble.task is Task.CLASSIFICATION:
        return np.argmax(predict_proba_ensemble(ensemble, features), axis=1)
    x = apply_scaler(features, ensemble.scaler)
    outputs = np.mean([forward(net, x) for net in ensemble.members], axis=0)
    if ensemble.target_scaler is None:
        return outputs
    return invert_scaler(outputs, ensemble.target_scaler)


def mean_cost_curves(ensemble: DjinnEnsemble) -> pd.DataFrame:
    """Member-averaged cost history, one row per epoch."""
    frames = [history.to_frame() for history in ensemble.histories]
    if not frames:
        raise ConfigurationError("ensemble carries no cost histories")
    return pd.concat(frames).groupby("epoch", as_index=False).mean()


@dataclass(frozen=True)
class SweepResult:
    """normalized[k, p]: test MSE of counts[k] trees over the 1-tree MSE, permutation p."""
    counts: tuple[int, ...]
    normalized: NDArray[np.float64]

    def to_frame(self) -> pd.DataFrame:
        frame = pd.DataFrame(
            {
                "n_trees": list(self.counts),
                "mean": self.normalized.mean(axis=1),
                "std": self.normalized.std(axis=1),
            }
        )
        for p in range(self.normalized.shape[1]):
            frame[f"p{p}"] = self.normalized[:, p]
        return frame


def sweep_tree_count(
    dataset: Dataset,
    counts: Sequence[int],
    tree: TreeConfig,
    training: TrainingConfig,
    plan: SplitPlan,
    base_seed: int = 0,
    n_jobs: int = 1,
) -> SweepResult:
    """
    Member i depends only on the fold and base_seed + i, so each permutation
    trains the largest ensemble once and scores its prefixes.
    """
    if dataset.task is not Task.REGRESSION:
        raise ConfigurationError("the tree-count sweep scores MSE and needs a regression dataset")
    counts = tuple(int(c) for c in counts)
    if not counts or min(counts) < 1 or list(counts) != sorted(set(counts)):
        raise ConfigurationError(f"tree counts must be distinct, ascending and >= 1, got {counts}")

    normalized = np.zeros((len(counts), len(plan)))
    for p, (train_idx, test_idx) in enumerate(plan.permutations):
        train_part, test_part = dataset.subset(train_idx), dataset.subset(test_idx)
        ensemble = build_and_train(train_part, counts[-1], tree, training, base_seed=base_seed, n_jobs=n_jobs)
        single = regression_metrics(test_part.targets, ensemble.head(1).predict(test_part.features))["mse"]
        if single == 0.0:
            raise MetricError(f"permutation {p}: single-tree MSE is 0, cannot normalize")
        for k, n in enumerate(counts):
            mse = regression_metrics(test_part.targets, ensemble.head(n).predict(test_part.features))["mse"]
            normalized[k, p] = mse / single
        logger.info(f"Sweep permutation {p}: normalized MSE at {counts[-1]} trees {normalized[-1, p]:.4f}")
    return SweepResult(counts=counts, normalized=normalized)

"""
Cross-validated evaluation over fixed permutations and scheme comparison.
"""
from __future__ import annotations

from typing import Callable, Protocol, Sequence

import numpy as np
from loguru import logger
from numpy.typing import NDArray

from djinn.data.dataset import Dataset, Task
from djinn.data.splits import SplitPlan, check_fold_sizes
from djinn.metrics.report import attach_pvalues, build_report
from djinn.metrics.scores import classification_metrics, regression_metrics
from djinn.schemas.config import InitScheme, TrainingConfig, TreeConfig
from djinn.schemas.report import EvalReport
from djinn.services.ensemble_service import DjinnEnsemble, build_and_train


class FittedModel(Protocol):
    @property
    def architectures(self) -> list[tuple[int, ...]]: ...

    def predict(self, features: NDArray[np.float64]) -> NDArray: ...


ModelBuilder = Callable[[Dataset, int], FittedModel]


def score(dataset: Dataset, predictions: NDArray) -> dict[str, float]:
    """Metrics of the dataset's task, in unscaled target units."""
    if dataset.task is Task.CLASSIFICATION:
        return classification_metrics(dataset.labels, predictions, dataset.n_classes)
    return regression_metrics(dataset.targets, predictions)


def crossval_run(
    name: str, builder: ModelBuilder, dataset: Dataset, plan: SplitPlan
) -> tuple[EvalReport, list[FittedModel]]:
    """`builder(train_part, permutation_index)` fits on the train rows only."""
    check_fold_sizes(plan)
    per_permutation = []
    architectures = []
    models = []
    for p, (train_idx, test_idx) in enumerate(plan.permutations):
        train_part, test_part = dataset.subset(train_idx), dataset.subset(test_idx)
        logger.info(f"{name}: permutation {p + 1}/{len(plan)} ({train_part.n_samples} train rows)")
        model = builder(train_part, p)
        scores = score(test_part, model.predict(test_part.features))
        per_permutation.append(scores)
        architectures.append(model.architectures)
        models.append(model)
        logger.debug(f"{name}: permutation {p} scores {scores}")
    return build_report(name, dataset.task, per_permutation, architectures), models


def crossval_evaluate(
    name: str, builder: ModelBuilder, dataset: Dataset, plan: SplitPlan
) -> EvalReport:
    report, _ = crossval_run(name, builder, dataset, plan)
    return report


def ensemble_builder(
    n_trees: int,
    tree: TreeConfig,
    training: TrainingConfig,
    scheme: InitScheme = InitScheme.DJINN,
    base_seed: int = 0,
    n_jobs: int = 1,
    track_scaled_cost: bool = False,
) -> Callable[[Dataset, int], DjinnEnsemble]:
    def build(train_part: Dataset, permutation: int) -> DjinnEnsemble:
        return build_and_train(
            train_part,
            n_trees,
            tree,
            training,
            scheme=scheme,
            base_seed=base_seed,
            n_jobs=n_jobs,
            track_scaled_cost=track_scaled_cost,
        )

    return build


def compare_schemes(
    dataset: Dataset,
    plan: SplitPlan,
    n_trees: int,
    tree: TreeConfig,
    training: TrainingConfig,
    schemes: Sequence[InitScheme] = tuple(InitScheme),
    base_seed: int = 0,
    n_jobs: int = 1,
) -> tuple[list[EvalReport], dict[InitScheme, list[DjinnEnsemble]]]:
    """
    Every scheme sees the same folds and seeds, hence the same forests and
    architectures. p-values are taken against the first scheme.
    """
    reports = []
    ensembles: dict[InitScheme, list[DjinnEnsemble]] = {}
    for scheme in schemes:
        builder = ensemble_builder(
            n_trees, tree, training, scheme, base_seed, n_jobs,
            track_scaled_cost=dataset.task is Task.REGRESSION,
        )
        report, models = crossval_run(scheme.value, builder, dataset, plan)
        reports.append(report)
        ensembles[scheme] = models  # type: ignore[assignment]
    reference = reports[0]
    return [attach_pvalues(report, reference) for report in reports], ensembles

"""
`djinn logic-demo`: IF(x), OR and XOR truth tables mapped from single trees,
trained, and printed with the DOT graphs of every stage.

A mapped ReLU can start inactive on all four rows, or be driven there by
training, and then never recovers. When the trained network misfits its
truth table the tree is remapped with the next attempt seed.
"""
import argparse
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Optional, Union

import numpy as np
from loguru import logger
from numpy.typing import NDArray
from pydantic import BaseModel

from djinn.core.config import Settings
from djinn.data.dataset import Dataset, Task
from djinn.data.synthetic import LOGIC_GATES, logic_gate
from djinn.mapping.export import initialized_to_dot, initialized_to_schema
from djinn.mapping.initializer import InitializedNetwork, map_tree
from djinn.mapping.pruning import prune_dead_neurons
from djinn.net.network import Network, predict
from djinn.net.trainer import CostHistory, train
from djinn.repositories.artifact_repository import ArtifactRepository
from djinn.schemas.config import TrainingConfig
from djinn.tree.cart import DecisionTree, fit_tree
from djinn.tree.export import tree_to_dot, tree_to_schema
from djinn.tree.topology import analyze_topology

NAME = "logic-demo"
LOGIC_TRAINING = TrainingConfig(epochs=500, learning_rate=0.006, batch_size=1)
MAX_ATTEMPTS = 20
# attempt k maps and shuffles with seed + k * ATTEMPT_STRIDE
ATTEMPT_STRIDE = 1000


@dataclass(frozen=True)
class GateFit:
    mapped: InitializedNetwork
    trained: Network
    history: CostHistory
    predicted: NDArray[np.int64]
    seed: int
    attempts: int

    def correct(self, dataset: Dataset) -> int:
        return int(np.sum(self.predicted == dataset.labels))


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(NAME, help="map and train IF/OR/XOR truth tables")
    parser.add_argument("--seed", type=int, help="first mapping and shuffle seed")
    parser.add_argument("--out", help="directory for DOT and JSON files")
    parser.set_defaults(handler=run)


def fit_gate(dataset: Dataset, tree: DecisionTree, seed: int) -> GateFit:
    """
    Map, prune and train until the network reproduces every row, or return
    the lowest-cost attempt after MAX_ATTEMPTS.
    """
    topology = analyze_topology(tree)
    best: Optional[GateFit] = None
    for attempt in range(MAX_ATTEMPTS):
        attempt_seed = seed + attempt * ATTEMPT_STRIDE
        mapped = prune_dead_neurons(map_tree(tree, topology, dataset.n_features, 2, attempt_seed))
        config = LOGIC_TRAINING.model_copy(update={"shuffle_seed": attempt_seed})
        trained, history = train(mapped.to_network(Task.CLASSIFICATION), dataset, config)
        fit = GateFit(
            mapped=mapped,
            trained=trained,
            history=history,
            predicted=np.argmax(predict(trained, dataset.features), axis=1),
            seed=attempt_seed,
            attempts=attempt + 1,
        )
        if fit.correct(dataset) == dataset.n_samples:
            return fit
        logger.debug(
            f"Seed {attempt_seed} fits {fit.correct(dataset)}/{dataset.n_samples} rows; remapping"
        )
        if best is None or history.cost[-1] < best.history.cost[-1]:
            best = fit
    assert best is not None
    logger.warning(f"No attempt reproduced the truth table in {MAX_ATTEMPTS} tries")
    return replace(best, attempts=MAX_ATTEMPTS)


def run_gate(name: str, seed: int) -> tuple[str, dict[str, Union[str, BaseModel]]]:
    """Truth-table text plus the artifacts of one gate."""
    dataset = logic_gate(name)
    tree = fit_tree(dataset.features, dataset.targets, Task.CLASSIFICATION, max_depth=None, n_classes=2)
    fit = fit_gate(dataset, tree, seed)

    correct = fit.correct(dataset)
    lines = [
        f"{name.upper()}  widths {fit.trained.widths}  final cost {fit.history.cost[-1]:.4f}"
        f"  seed {fit.seed} (attempt {fit.attempts})"
    ]
    header = "  ".join(dataset.feature_names)
    lines.append(f"  {header}  | truth  predicted")
    for row, truth, guess in zip(dataset.features, dataset.labels, fit.predicted):
        cells = "  ".join(f"{int(v):>{len(n)}}" for v, n in zip(row, dataset.feature_names))
        lines.append(f"  {cells}  | {truth:>5}  {guess:>9}")
    lines.append(f"  {correct}/{dataset.n_samples} correct")
    logger.info(f"{name}: {correct}/{dataset.n_samples} truth-table rows correct")

    artifacts: dict[str, Union[str, BaseModel]] = {
        f"{name}_tree.dot": tree_to_dot(tree, name=f"{name}_tree"),
        f"{name}_tree.json": tree_to_schema(tree),
        f"{name}_init.dot": initialized_to_dot(fit.mapped, name=f"{name}_init"),
        f"{name}_init.json": initialized_to_schema(fit.mapped),
    }
    return "\n".join(lines), artifacts


def run(args: argparse.Namespace, settings: Settings) -> ArtifactRepository:
    seed = args.seed if args.seed is not None else settings.DEFAULT_SEED
    repo = ArtifactRepository(Path(args.out or settings.OUTPUT_DIR))
    tables = []
    for gate in LOGIC_GATES:
        table, artifacts = run_gate(gate, seed)
        tables.append(table)
        for filename, artifact in artifacts.items():
            if isinstance(artifact, str):
                repo.stage_text(filename, artifact)
            else:
                repo.stage_json(filename, artifact)
    print("\n\n".join(tables))
    return repo

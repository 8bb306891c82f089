"""
Arguments shared by the experiment commands and their translation into a
validated RunConfig.
"""
from __future__ import annotations

import argparse
from typing import Any, Sequence

import pandas as pd

from djinn.core.config import Settings
from djinn.core.exceptions import ConfigurationError, DataError
from djinn.core.presets import PRESETS, get_preset
from djinn.data.dataset import Dataset, Task
from djinn.data.loader import load_csv
from djinn.data.splits import SplitPlan, check_fold_sizes, make_splits
from djinn.schemas.config import InitScheme, RunConfig, TrainingConfig, TreeConfig, validated
from djinn.services.ensemble_service import DjinnEnsemble, mean_cost_curves


def add_run_arguments(parser: argparse.ArgumentParser, scheme: bool = False) -> None:
    data = parser.add_argument_group("data")
    data.add_argument("--data", required=True, help="CSV file with a header row")
    data.add_argument(
        "--target",
        action="append",
        help="target column (repeat for multi-output regression; default: last column)",
    )
    data.add_argument("--task", choices=[t.value for t in Task], help="default: from --preset")

    model = parser.add_argument_group("model")
    model.add_argument("--preset", choices=sorted(PRESETS), help="hyper-parameters of a known dataset")
    model.add_argument("--trees", type=int, help="ensemble size (default 10)")
    model.add_argument("--max-depth", type=int, help="maximum tree depth")
    model.add_argument("--epochs", type=int)
    model.add_argument("--lr", type=float, help="Adam learning rate")
    model.add_argument("--batch", type=int, help="mini-batch size")
    if scheme:
        model.add_argument(
            "--scheme",
            choices=[s.value for s in InitScheme],
            default=InitScheme.DJINN.value,
            help="weight initialization",
        )

    run = parser.add_argument_group("run")
    run.add_argument("--seed", type=int, help="base seed for splits, trees and weights")
    run.add_argument("--permutations", type=int, help="train/test permutations")
    run.add_argument("--test-fraction", type=float)
    run.add_argument("--out", help="output directory")
    run.add_argument("--jobs", type=int, help="members trained in parallel")


def _pick(*values: Any) -> Any:
    return next(v for v in values if v is not None)


def _default_target(path: str) -> tuple[str, ...]:
    try:
        header = pd.read_csv(path, nrows=0).columns
    except FileNotFoundError:
        raise DataError(f"file not found: {path}") from None
    except (pd.errors.EmptyDataError, pd.errors.ParserError) as exc:
        raise DataError(f"cannot read the header of {path}: {exc}") from exc
    if len(header) < 2:
        raise DataError(f"{path} needs at least one feature and one target column")
    return (str(header[-1]),)


def run_config_from_args(args: argparse.Namespace, settings: Settings) -> RunConfig:
    """Explicit flags win over the preset, the preset over built-in defaults."""
    preset = get_preset(args.preset) if args.preset else None
    task = args.task or (preset.task.value if preset else None)
    if task is None:
        raise ConfigurationError("--task is required when no --preset is given")
    seed = _pick(args.seed, settings.DEFAULT_SEED)

    tree_defaults = preset.tree() if preset else TreeConfig()
    training_defaults = preset.training() if preset else TrainingConfig()
    tree = validated(
        TreeConfig,
        **{**tree_defaults.model_dump(), "max_depth": _pick(args.max_depth, tree_defaults.max_depth)},
    )
    training = validated(
        TrainingConfig,
        **{
            **training_defaults.model_dump(),
            "epochs": _pick(args.epochs, training_defaults.epochs),
            "learning_rate": _pick(args.lr, training_defaults.learning_rate),
            "batch_size": _pick(args.batch, training_defaults.batch_size),
            "shuffle_seed": seed,
        },
    )
    return validated(  # type: ignore[return-value]
        RunConfig,
        data=args.data,
        target_columns=tuple(args.target) if args.target else _default_target(args.data),
        task=task,
        n_trees=_pick(args.trees, preset.n_trees if preset else None, 10),
        tree=tree,
        training=training,
        scheme=getattr(args, "scheme", InitScheme.DJINN.value),
        seed=seed,
        n_permutations=_pick(args.permutations, settings.N_PERMUTATIONS),
        test_fraction=_pick(args.test_fraction, settings.TEST_FRACTION),
        output_dir=_pick(args.out, settings.OUTPUT_DIR),
        n_jobs=_pick(args.jobs, settings.N_JOBS),
    )


def load_run_data(config: RunConfig) -> tuple[Dataset, SplitPlan]:
    dataset = load_csv(config.data, config.target_columns, config.task)
    plan = make_splits(dataset.n_samples, config.n_permutations, config.test_fraction, config.seed)
    check_fold_sizes(plan)
    return dataset, plan


def cost_frame(ensembles: Sequence[DjinnEnsemble]) -> pd.DataFrame:
    """Member-mean cost per epoch, one block of rows per permutation."""
    frames = []
    for permutation, ensemble in enumerate(ensembles):
        frame = mean_cost_curves(ensemble)
        frame.insert(0, "permutation", permutation)
        frames.append(frame)
    return pd.concat(frames, ignore_index=True)


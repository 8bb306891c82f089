"""
`djinn sweep-trees`: test MSE against ensemble size, normalized to one tree.
"""
import argparse

from djinn.cli.common import add_run_arguments, load_run_data, run_config_from_args
from djinn.core.config import Settings
from djinn.core.exceptions import ConfigurationError
from djinn.repositories.artifact_repository import ArtifactRepository
from djinn.services.ensemble_service import sweep_tree_count

NAME = "sweep-trees"
DEFAULT_COUNTS = "1,2,5,10,20"


def parse_counts(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError:
        raise ConfigurationError(f"--counts must be comma-separated integers, got {text!r}") from None


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(NAME, help="normalized MSE as a function of tree count")
    add_run_arguments(parser)
    parser.add_argument("--counts", default=DEFAULT_COUNTS, help=f"default {DEFAULT_COUNTS}")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, settings: Settings) -> ArtifactRepository:
    config = run_config_from_args(args, settings)
    counts = parse_counts(args.counts)
    dataset, plan = load_run_data(config)
    result = sweep_tree_count(
        dataset, counts, config.tree, config.training, plan, base_seed=config.seed, n_jobs=config.n_jobs
    )
    frame = result.to_frame()

    repo = ArtifactRepository(config.output_dir)
    repo.stage_csv("sweep.csv", frame)
    print(frame[["n_trees", "mean", "std"]].to_string(index=False, float_format=lambda v: f"{v:.4f}"))
    return repo

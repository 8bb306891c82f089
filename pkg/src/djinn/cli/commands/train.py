"""
`djinn train`: cross-validated DJINN (or baseline) ensemble with artifacts.
"""
import argparse

from djinn.cli.common import add_run_arguments, cost_frame, load_run_data, run_config_from_args
from djinn.core.config import Settings
from djinn.data.dataset import Task
from djinn.mapping.export import network_to_dot
from djinn.metrics.report import format_table
from djinn.repositories.artifact_repository import ArtifactRepository
from djinn.services.ensemble_service import DjinnEnsemble
from djinn.services.evaluation_service import crossval_run, ensemble_builder

NAME = "train"


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(NAME, help="train and cross-validate an ensemble")
    add_run_arguments(parser, scheme=True)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, settings: Settings) -> ArtifactRepository:
    config = run_config_from_args(args, settings)
    dataset, plan = load_run_data(config)
    builder = ensemble_builder(
        config.n_trees,
        config.tree,
        config.training,
        config.scheme,
        config.seed,
        config.n_jobs,
        track_scaled_cost=dataset.task is Task.REGRESSION,
    )
    report, models = crossval_run(config.scheme.value, builder, dataset, plan)
    ensembles: list[DjinnEnsemble] = list(models)  # type: ignore[arg-type]

    # the saved model is the one trained on permutation 0
    first = ensembles[0]
    repo = ArtifactRepository(config.output_dir)
    repo.stage_json("report.json", report)
    repo.stage_json("ensemble.json", first.to_schema())
    repo.stage_json("splits.json", plan.to_dict())
    repo.stage_csv(f"cost_history_{config.scheme.value}.csv", cost_frame(ensembles))
    repo.stage_text("network_0.dot", network_to_dot(first.members[0].weights, name="member_0"))
    print(format_table([report]))
    return repo

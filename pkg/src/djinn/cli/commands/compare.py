"""
`djinn compare`: DJINN against the random dense and random sparse baselines
on identical folds, with t-test p-values against DJINN.
"""
import argparse

from djinn.cli.common import add_run_arguments, cost_frame, load_run_data, run_config_from_args
from djinn.core.config import Settings
from djinn.metrics.report import format_table
from djinn.repositories.artifact_repository import ArtifactRepository
from djinn.schemas.config import InitScheme
from djinn.services.evaluation_service import compare_schemes

NAME = "compare"


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(NAME, help="compare DJINN with random initializations")
    add_run_arguments(parser)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, settings: Settings) -> ArtifactRepository:
    config = run_config_from_args(args, settings)
    dataset, plan = load_run_data(config)
    reports, ensembles = compare_schemes(
        dataset,
        plan,
        config.n_trees,
        config.tree,
        config.training,
        schemes=tuple(InitScheme),
        base_seed=config.seed,
        n_jobs=config.n_jobs,
    )

    repo = ArtifactRepository(config.output_dir)
    repo.stage_json("report.json", {"reports": [r.model_dump(mode="json") for r in reports]})
    repo.stage_json("splits.json", plan.to_dict())
    for scheme, models in ensembles.items():
        repo.stage_csv(f"cost_history_{scheme.value}.csv", cost_frame(models))
    print(format_table(reports, reference=InitScheme.DJINN.value))
    return repo

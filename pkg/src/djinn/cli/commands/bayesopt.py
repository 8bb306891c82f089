"""
`djinn bayesopt`: Bayesian width search at the DJINN depth, reported next
to the DJINN ensemble trained on the same folds.
"""
import argparse

import pandas as pd

from djinn.cli.common import add_run_arguments, load_run_data, run_config_from_args
from djinn.core.config import Settings
from djinn.metrics.report import format_table
from djinn.repositories.artifact_repository import ArtifactRepository
from djinn.schemas.config import SearchConfig, validated
from djinn.services.bayesopt_service import compare_bayesopt

NAME = "bayesopt"


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(NAME, help="Bayesian architecture search vs DJINN")
    add_run_arguments(parser)
    search = parser.add_argument_group("search")
    search.add_argument("--budget", type=int, default=100, help="networks trained per search")
    search.add_argument("--initial", type=int, default=10, help="quasi-random initial design size")
    search.add_argument("--width-max", type=int, help="upper width bound (default 2x widest DJINN layer)")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, settings: Settings) -> ArtifactRepository:
    config = run_config_from_args(args, settings)
    search = validated(
        SearchConfig,
        budget=args.budget,
        n_initial=min(args.initial, args.budget),
        width_upper=args.width_max,
    )
    dataset, plan = load_run_data(config)
    reports, trials = compare_bayesopt(
        dataset,
        plan,
        config.n_trees,
        config.tree,
        config.training,
        search=search,  # type: ignore[arg-type]
        base_seed=config.seed,
        n_jobs=config.n_jobs,
    )

    rows = [
        {
            "permutation": p,
            "iteration": t.iteration,
            "widths": "-".join(str(w) for w in t.widths),
            "objective": t.objective,
            "seed": t.seed,
        }
        for p, fold in enumerate(trials)
        for t in fold
    ]
    best = [min(fold, key=lambda t: (t.objective, t.iteration)).to_schema().model_dump() for fold in trials]

    repo = ArtifactRepository(config.output_dir)
    repo.stage_json("report.json", {"reports": [r.model_dump(mode="json") for r in reports]})
    repo.stage_json("best_architecture.json", {"permutations": best})
    repo.stage_csv("trials.csv", pd.DataFrame(rows))
    print(format_table(reports, reference="djinn"))
    return repo

"""
`djinn make-synthetic`: CSV sample of the cliff/peak response surface.
"""
import argparse
from pathlib import Path

from djinn.core.config import Settings
from djinn.data.loader import to_csv_text
from djinn.data.synthetic import make_cliff_peak
from djinn.repositories.artifact_repository import ArtifactRepository

NAME = "make-synthetic"


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(NAME, help="generate the cliff/peak regression dataset")
    parser.add_argument("--samples", type=int, default=10000)
    parser.add_argument("--features", type=int, default=9)
    parser.add_argument("--seed", type=int, help="Latin-hypercube seed")
    parser.add_argument("--out", default="yield.csv", help="CSV path")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, settings: Settings) -> ArtifactRepository:
    seed = args.seed if args.seed is not None else settings.DEFAULT_SEED
    dataset = make_cliff_peak(args.samples, args.features, seed)
    out = Path(args.out)
    repo = ArtifactRepository(out.parent)
    repo.stage_text(out.name, to_csv_text(dataset))
    return repo

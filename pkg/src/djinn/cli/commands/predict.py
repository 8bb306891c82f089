"""
`djinn predict`: score a CSV with an ensemble saved by `djinn train`.
"""
import argparse
from pathlib import Path

import numpy as np
import pandas as pd
from loguru import logger
from numpy.typing import NDArray

from djinn.core.config import Settings
from djinn.core.exceptions import DataError
from djinn.data.dataset import Task
from djinn.data.loader import load_features
from djinn.repositories.artifact_repository import ArtifactRepository, load_ensemble
from djinn.services.ensemble_service import DjinnEnsemble, predict_proba_ensemble

NAME = "predict"


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(NAME, help="predict a CSV with a saved ensemble")
    parser.add_argument("model", help="ensemble JSON written by train")
    parser.add_argument("data", help="CSV whose columns are the training features")
    parser.add_argument(
        "--drop", nargs="+", default=[], metavar="COLUMN", help="columns to ignore, e.g. targets"
    )
    parser.add_argument("--out", default="predictions.csv", help="CSV path")
    parser.set_defaults(handler=run)


def prediction_frame(ensemble: DjinnEnsemble, features: NDArray[np.float64]) -> pd.DataFrame:
    """Class index and mean member probabilities, or one column per regression output."""
    if ensemble.task is Task.CLASSIFICATION:
        proba = predict_proba_ensemble(ensemble, features)
        frame = pd.DataFrame(proba, columns=[f"p{k}" for k in range(proba.shape[1])])
        frame.insert(0, "class", np.argmax(proba, axis=1))
        return frame
    outputs = ensemble.predict(features)
    if outputs.shape[1] == 1:
        return pd.DataFrame({"prediction": outputs[:, 0]})
    return pd.DataFrame(outputs, columns=[f"prediction_{j}" for j in range(outputs.shape[1])])


def run(args: argparse.Namespace, settings: Settings) -> ArtifactRepository:
    ensemble = DjinnEnsemble.from_schema(load_ensemble(args.model))
    features, columns = load_features(args.data, exclude=args.drop)
    if features.shape[1] != ensemble.scaler.n_features:
        raise DataError(
            f"{args.data} has {features.shape[1]} feature columns {list(columns)} but the "
            f"ensemble was trained on {ensemble.scaler.n_features}"
        )
    frame = prediction_frame(ensemble, features)
    logger.info(f"Predicted {len(frame)} rows with {len(ensemble)} members")
    out = Path(args.out)
    repo = ArtifactRepository(out.parent)
    repo.stage_csv(out.name, frame)
    return repo

"""
CSV ingestion. CSV is the only supported format: UTF-8, comma separated,
one header row, decimal-point reals.
"""
from pathlib import Path
from typing import Sequence, Union

import numpy as np
import pandas as pd
from loguru import logger

from djinn.core.exceptions import DataError
from djinn.data.dataset import Dataset, Task


def _numeric_block(frame: pd.DataFrame) -> np.ndarray:
    """Convert a block of string cells to floats, naming the first bad cell."""
    try:
        # float() per cell; exact for shortest round-trip text
        values = frame.to_numpy(dtype=object).astype(np.float64)
    except ValueError:
        values = frame.apply(pd.to_numeric, errors="coerce").to_numpy(dtype=np.float64)
    bad = ~np.isfinite(values)
    if bad.any():
        row, col = np.argwhere(bad)[0]
        # header is line 1, first data row is row 1
        raise DataError(
            f"non-numeric cell at row {row + 1}, column {frame.columns[col]!r}: "
            f"{frame.iat[row, col]!r}"
        )
    return values


def _read_cells(path: Path) -> pd.DataFrame:
    """Every cell as text; numbers are parsed by _numeric_block."""
    if not path.is_file():
        raise DataError(f"file not found: {path}")
    try:
        frame = pd.read_csv(
            path, dtype=str, keep_default_na=False, skipinitialspace=True, encoding="utf-8"
        )
    except pd.errors.EmptyDataError as exc:
        raise DataError(f"empty file: {path}") from exc
    except (pd.errors.ParserError, UnicodeDecodeError) as exc:
        raise DataError(f"cannot parse {path}: {exc}") from exc
    if frame.empty:
        raise DataError(f"empty file: {path}")
    return frame


def load_csv(
    path: Union[str, Path],
    target_columns: Sequence[str],
    task: Union[Task, str],
) -> Dataset:
    """
    Load a dataset from CSV.

    Features are all non-target columns in header order. Classification targets
    are mapped to contiguous class indices in order of first appearance.
    """
    path = Path(path)
    task = Task(task)
    if not target_columns:
        raise DataError("at least one target column is required")
    frame = _read_cells(path)
    missing = [c for c in target_columns if c not in frame.columns]
    if missing:
        raise DataError(f"missing target column(s) {missing} in {path}")

    feature_columns = [c for c in frame.columns if c not in target_columns]
    if not feature_columns:
        raise DataError(f"no feature columns left in {path}")
    features = _numeric_block(frame[feature_columns])

    if task is Task.CLASSIFICATION:
        if len(target_columns) != 1:
            raise DataError("classification takes exactly one target column")
        raw = frame[target_columns[0]].str.strip()
        codes, uniques = pd.factorize(raw, sort=False)
        targets = codes.astype(np.float64).reshape(-1, 1)
        n_classes = len(uniques)
        class_labels = tuple(str(u) for u in uniques)
    else:
        targets = _numeric_block(frame[list(target_columns)])
        n_classes = 0
        class_labels = ()

    logger.debug(
        f"Loaded {path.name}: {features.shape[0]} rows, {features.shape[1]} features, "
        f"task={task.value}"
    )
    return Dataset(
        features=features,
        targets=targets,
        task=task,
        n_classes=n_classes,
        feature_names=tuple(feature_columns),
        target_names=tuple(target_columns),
        class_labels=class_labels,
    )


def load_features(
    path: Union[str, Path], exclude: Sequence[str] = ()
) -> tuple[np.ndarray, tuple[str, ...]]:
    """Feature matrix of a CSV for prediction; listed columns are dropped when present."""
    path = Path(path)
    frame = _read_cells(path)
    columns = [c for c in frame.columns if c not in exclude]
    if not columns:
        raise DataError(f"no feature columns left in {path}")
    return _numeric_block(frame[columns]), tuple(columns)


def to_frame(dataset: Dataset) -> pd.DataFrame:
    """Features first and targets last; class targets use their original labels."""
    frame = pd.DataFrame(dataset.features, columns=list(dataset.feature_names))
    if dataset.task is Task.CLASSIFICATION and dataset.class_labels:
        labels = np.asarray(dataset.class_labels, dtype=object)
        frame[dataset.target_names[0]] = labels[dataset.labels]
    elif dataset.task is Task.CLASSIFICATION:
        frame[dataset.target_names[0]] = dataset.labels
    else:
        for j, name in enumerate(dataset.target_names):
            frame[name] = dataset.targets[:, j]
    return frame


def to_csv_text(dataset: Dataset) -> str:
    """CSV text that load_csv reads back bit for bit."""
    return to_frame(dataset).to_csv(index=False, float_format="%.17g", lineterminator="\n")

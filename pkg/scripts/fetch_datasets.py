"""
Write the public benchmark datasets as CSV files the `djinn` commands read.
Run with: uv run scripts/fetch_datasets.py [--out data]

Class targets are written as their label names, regression targets as the
last column. California housing is downloaded on first use by scikit-learn.
Boston housing is no longer shipped by scikit-learn and is not fetched.
"""
import argparse
import sys
from pathlib import Path

import pandas as pd
from loguru import logger

# (CSV name, scikit-learn loader, target column, preset)
DATASETS = (
    ("iris.csv", "load_iris", "species", "iris"),
    ("wine.csv", "load_wine", "cultivar", "wine"),
    ("breast_cancer.csv", "load_breast_cancer", "diagnosis", "breast-cancer"),
    ("digits.csv", "load_digits", "digit", "digits"),
    ("diabetes.csv", "load_diabetes", "progression", "diabetes"),
    ("ca_housing.csv", "fetch_california_housing", "value", "ca-housing"),
)


def to_frame(bunch, target: str) -> pd.DataFrame:
    frame = pd.DataFrame(bunch.data, columns=[str(c) for c in bunch.feature_names])
    names = getattr(bunch, "target_names", None)
    if bunch.target.dtype.kind == "i" and names is not None and len(names) == bunch.target.max() + 1:
        frame[target] = [str(names[i]) for i in bunch.target]
    else:
        frame[target] = bunch.target
    return frame


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[1])
    parser.add_argument("--out", default="data", help="directory for the CSV files")
    parser.add_argument("--only", nargs="*", help="subset of presets to fetch")
    args = parser.parse_args()

    try:
        from sklearn import datasets
    except ImportError:
        print("scikit-learn is required: uv pip install -e '.[dev]'", file=sys.stderr)
        return 1

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for filename, loader, target, preset in DATASETS:
        if args.only and preset not in args.only:
            continue
        bunch = getattr(datasets, loader)()
        frame = to_frame(bunch, target)
        frame.to_csv(out / filename, index=False, float_format="%.17g")
        logger.info(f"{filename}: {len(frame)} rows -> djinn train --data {out / filename} --preset {preset}")
    return 0


if __name__ == "__main__":
    sys.exit(main())

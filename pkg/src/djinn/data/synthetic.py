"""
Synthetic datasets: a cliff/peak response surface standing in for the
private implosion-yield data, and logic-gate truth tables.
"""
import numpy as np
from scipy.stats import qmc

from djinn.core.exceptions import DataError
from djinn.data.dataset import Dataset, Task

LOGIC_GATES = ("if", "or", "xor")


def cliff_peak_response(x: np.ndarray) -> np.ndarray:
    """
    Smooth background + steep logistic cliff along an oblique direction +
    two narrow Gaussian peaks in the (x0, x1) plane. Strictly positive.
    """
    x = np.atleast_2d(np.asarray(x, dtype=np.float64))
    d = x.shape[1]
    weights = np.linspace(1.0, 0.2, d)
    weights /= np.linalg.norm(weights)
    projection = x @ weights - 0.5 * weights.sum()

    background = 0.5 + 0.5 * np.mean(x**2, axis=1)
    cliff = 4.0 / (1.0 + np.exp(-40.0 * projection))
    peaks = 3.0 * np.exp(-((x[:, 0] - 0.25) ** 2 + (x[:, 1] - 0.75) ** 2) / (2 * 0.08**2))
    if d > 2:
        peaks += 2.0 * np.exp(-((x[:, 0] - 0.8) ** 2 + (x[:, 2] - 0.2) ** 2) / (2 * 0.06**2))
    return background + cliff + peaks


def make_cliff_peak(n_samples: int, n_features: int = 9, seed: int = 0) -> Dataset:
    """Latin-hypercube sample of the cliff/peak surface on [0, 1]^n_features."""
    if n_samples < 2:
        raise DataError(f"need at least 2 samples, got {n_samples}")
    if n_features < 2:
        raise DataError(f"the surface needs at least 2 features, got {n_features}")
    sampler = qmc.LatinHypercube(d=n_features, seed=np.random.default_rng(seed))
    x = sampler.random(n_samples)
    y = cliff_peak_response(x).reshape(-1, 1)
    return Dataset(
        features=x,
        targets=y,
        task=Task.REGRESSION,
        feature_names=tuple(f"x{i}" for i in range(n_features)),
        target_names=("yield",),
    )


def logic_gate(name: str) -> Dataset:
    """Truth table for IF(x), x OR y, or x XOR y as a two-class dataset."""
    name = name.lower()
    if name == "if":
        x = np.array([[0.0], [1.0]])
        y = np.array([0, 1])
        feature_names: tuple[str, ...] = ("x",)
    elif name in ("or", "xor"):
        x = np.array([[0.0, 0.0], [0.0, 1.0], [1.0, 0.0], [1.0, 1.0]])
        a, b = x[:, 0].astype(int), x[:, 1].astype(int)
        y = (a | b) if name == "or" else (a ^ b)
        feature_names = ("x", "y")
    else:
        raise DataError(f"unknown logic gate {name!r}; expected one of {LOGIC_GATES}")
    return Dataset(
        features=x,
        targets=y.astype(np.float64),
        task=Task.CLASSIFICATION,
        n_classes=2,
        feature_names=feature_names,
        target_names=("out",),
        class_labels=("0", "1"),
    )

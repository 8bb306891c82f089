"""
Bayesian search over hidden-layer widths at a fixed layer count.

A quasi-random initial design is followed by Gaussian-process guided
proposals that maximize expected improvement. Every proposal costs one
trained network, and the search stops after exactly `budget` of them.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np
from loguru import logger
from numpy.typing import NDArray
from scipy import linalg
from scipy.stats import qmc

from djinn.baselines.init import random_dense_init
from djinn.bayesopt.acquisition import expected_improvement
from djinn.bayesopt.gp import GaussianProcess
from djinn.core.exceptions import OptimizationError
from djinn.core.monitoring import BAYESOPT_FALLBACKS, BAYESOPT_TRIALS
from djinn.data.dataset import Dataset
from djinn.data.splits import MIN_FOLD_ROWS, holdout_size
from djinn.mapping.architecture import Architecture
from djinn.net.losses import evaluate_loss
from djinn.net.network import Network, forward
from djinn.net.trainer import train
from djinn.schemas.config import SearchConfig, TrainingConfig
from djinn.schemas.trial import TrialSchema

Widths = tuple[int, ...]
Objective = Callable[[Widths, int], float]


@dataclass(frozen=True)
class SearchSpace:
    lower: tuple[int, ...]
    upper: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.lower or len(self.lower) != len(self.upper):
            raise OptimizationError(f"bounds {self.lower} / {self.upper} do not describe a space")
        for layer, (lo, hi) in enumerate(zip(self.lower, self.upper), start=1):
            if lo < 1 or hi < lo:
                raise OptimizationError(f"layer {layer} bounds [{lo}, {hi}] are invalid")

    @classmethod
    def uniform(cls, n_layers: int, lower: int, upper: int) -> SearchSpace:
        return cls(lower=(lower,) * n_layers, upper=(upper,) * n_layers)

    @property
    def n_layers(self) -> int:
        return len(self.lower)

    @property
    def cardinality(self) -> int:
        return int(np.prod([hi - lo + 1 for lo, hi in zip(self.lower, self.upper)], dtype=object))

    def contains(self, widths: Sequence[int]) -> bool:
        return len(widths) == self.n_layers and all(
            lo <= w <= hi for w, lo, hi in zip(widths, self.lower, self.upper)
        )

    def scale(self, widths: NDArray[np.float64]) -> NDArray[np.float64]:
        """Map widths to [0, 1] per layer; single-value layers map to 0."""
        lo = np.asarray(self.lower, dtype=np.float64)
        span = np.asarray(self.upper, dtype=np.float64) - lo
        return (np.asarray(widths, dtype=np.float64) - lo) / np.where(span == 0, 1.0, span)

    def from_unit(self, points: NDArray[np.float64]) -> list[Widths]:
        lo = np.asarray(self.lower, dtype=np.float64)
        hi = np.asarray(self.upper, dtype=np.float64)
        widths = np.clip(np.rint(lo + points * (hi - lo)), lo, hi).astype(int)
        return [tuple(int(w) for w in row) for row in widths]

    def sample(self, rng: np.random.Generator, n: int) -> list[Widths]:
        draws = rng.integers(self.lower, np.asarray(self.upper) + 1, size=(n, self.n_layers))
        return [tuple(int(w) for w in row) for row in draws]

    def enumerate(self) -> list[Widths]:
        ranges = [range(lo, hi + 1) for lo, hi in zip(self.lower, self.upper)]
        return [tuple(point) for point in itertools.product(*ranges)]


@dataclass(frozen=True)
class Trial:
    iteration: int
    widths: Widths
    objective: float
    seed: int

    def to_schema(self) -> TrialSchema:
        return TrialSchema(
            iteration=self.iteration, widths=list(self.widths), objective=self.objective, seed=self.seed
        )


def initial_design(
    space: SearchSpace, n_initial: int, rng: np.random.Generator
) -> list[Widths]:
    """Halton points rounded onto the grid; duplicates are replaced by random unseen points."""
    halton = qmc.Halton(d=space.n_layers, scramble=True, seed=rng)
    design: list[Widths] = []
    for widths in space.from_unit(halton.random(n_initial)):
        if widths not in design:
            design.append(widths)
    attempts = 0
    while len(design) < n_initial and attempts < 100 * n_initial:
        attempts += 1
        widths = space.sample(rng, 1)[0]
        if widths not in design or len(design) >= space.cardinality:
            design.append(widths)
    return design


def _candidates(
    space: SearchSpace, seen: set[Widths], n_candidates: int, rng: np.random.Generator
) -> list[Widths]:
    if space.cardinality <= n_candidates:
        pool = [w for w in space.enumerate() if w not in seen]
    else:
        pool = list(dict.fromkeys(w for w in space.sample(rng, n_candidates) if w not in seen))
    # exhausted spaces fall back to re-evaluating known points
    return pool or space.sample(rng, n_candidates)


def _propose(
    space: SearchSpace,
    trials: list[Trial],
    n_candidates: int,
    rng: np.random.Generator,
) -> Widths:
    seen = {t.widths for t in trials}
    pool = _candidates(space, seen, n_candidates, rng)
    x = space.scale(np.array([t.widths for t in trials], dtype=np.float64))
    y = np.array([t.objective for t in trials])
    try:
        gp = GaussianProcess().fit(x, y)
    except (linalg.LinAlgError, np.linalg.LinAlgError) as exc:
        BAYESOPT_FALLBACKS.inc()
        logger.warning(f"Surrogate fit failed ({exc}); proposing a random architecture")
        return pool[int(rng.integers(len(pool)))]
    mean, std = gp.predict(space.scale(np.array(pool, dtype=np.float64)))
    ei = expected_improvement(mean, std, float(y.min()))
    return pool[int(np.argmax(ei))]


def minimize(
    objective: Objective,
    space: SearchSpace,
    budget: int,
    seed: int = 0,
    n_initial: int = 10,
    n_candidates: int = 1000,
) -> tuple[Trial, list[Trial]]:
    """
    Evaluate `objective(widths, seed)` exactly `budget` times. Trial i gets
    seed + i. Ties on the objective keep the earliest trial.
    """
    if budget < n_initial:
        raise OptimizationError(f"budget {budget} is smaller than the initial design {n_initial}")
    rng = np.random.default_rng(seed)
    trials: list[Trial] = []

    def evaluate(widths: Widths) -> None:
        iteration = len(trials)
        value = float(objective(widths, seed + iteration))
        if not np.isfinite(value):
            raise OptimizationError(f"objective returned {value} for widths {widths}")
        trials.append(Trial(iteration=iteration, widths=widths, objective=value, seed=seed + iteration))
        BAYESOPT_TRIALS.inc()
        logger.debug(f"Trial {iteration}: widths={widths} objective={value:.6g}")

    for widths in initial_design(space, n_initial, rng):
        evaluate(widths)
    while len(trials) < budget:
        evaluate(_propose(space, trials, n_candidates, rng))

    best = min(trials, key=lambda t: (t.objective, t.iteration))
    logger.info(f"Search finished after {len(trials)} trials: best widths {best.widths} ({best.objective:.6g})")
    return best, trials


def _validation_split(dataset: Dataset, fraction: float, seed: int) -> tuple[Dataset, Dataset]:
    n_val = holdout_size(dataset.n_samples, fraction)
    if min(n_val, dataset.n_samples - n_val) < MIN_FOLD_ROWS:
        raise OptimizationError(
            f"{dataset.n_samples} training rows cannot be split into search and validation "
            f"parts of at least {MIN_FOLD_ROWS} rows each"
        )
    order = np.random.default_rng(seed).permutation(dataset.n_samples)
    return dataset.subset(np.sort(order[n_val:])), dataset.subset(np.sort(order[:n_val]))


def optimize(
    dataset_train: Dataset,
    space: SearchSpace,
    budget: int,
    training: TrainingConfig,
    rng_seed: int = 0,
    search: Optional[SearchConfig] = None,
) -> tuple[Trial, list[Trial], Network]:
    """
    Search widths for dense Xavier-initialized networks trained on an internal
    split of `dataset_train` and scored on the held-out part. Returns the best
    trial, every trial, and the network trained for the best trial.
    """
    search = search or SearchConfig(budget=budget, n_initial=min(10, budget))
    fit_part, val_part = _validation_split(dataset_train, search.validation_fraction, rng_seed)
    if training.batch_size > fit_part.n_samples:
        logger.debug(
            f"Batch size {training.batch_size} exceeds {fit_part.n_samples} search rows; clamping"
        )
        training = training.model_copy(update={"batch_size": fit_part.n_samples})
    loss = training.loss_for(dataset_train.task)
    best_net: dict[str, object] = {}

    def objective(widths: Widths, seed: int) -> float:
        architecture = Architecture(
            n_in=dataset_train.n_features, hidden_widths=widths, n_out=dataset_train.n_outputs
        )
        net = random_dense_init(architecture, seed).to_network(dataset_train.task)
        config = training.model_copy(update={"shuffle_seed": training.shuffle_seed + seed})
        trained, _ = train(net, fit_part, config, scheme="bayesopt")
        value, _ = evaluate_loss(loss, forward(trained, val_part.features), val_part.targets)
        if "value" not in best_net or value < best_net["value"]:  # type: ignore[operator]
            best_net.update(value=value, net=trained)
        return value

    best, trials = minimize(
        objective,
        space,
        budget,
        seed=rng_seed,
        n_initial=search.n_initial,
        n_candidates=search.n_candidates,
    )
    return best, trials, best_net["net"]  # type: ignore[return-value]

"""
Exception hierarchy. Everything raised deliberately by the package derives
from DjinnError so the command line can map it to exit code 1.
"""
from typing import Optional


class DjinnError(Exception):
    """Base class for all package errors."""


class ConfigurationError(DjinnError):
    """A run, training, tree or search configuration failed validation."""


class DataError(DjinnError):
    """Dataset ingestion, validation, scaling or splitting failed."""


class TreeError(DjinnError):
    """Tree fitting or topology analysis failed."""


class MappingError(DjinnError):
    """A tree could not be mapped to a network."""


class TrainingError(DjinnError):
    """Network execution or training failed."""


class DivergenceError(TrainingError):
    """The training cost became non-finite."""

    def __init__(self, epoch: int, batch: int, cost: Optional[float] = None) -> None:
        self.epoch = epoch
        self.batch = batch
        self.cost = cost
        super().__init__(
            f"training diverged at epoch {epoch}, batch {batch} (cost={cost})"
        )


class BudgetError(DjinnError):
    """A sparsity budget cannot be realized for a layer."""


class MetricError(DjinnError):
    """A metric is undefined for the given inputs."""


class OptimizationError(DjinnError):
    """Bayesian architecture search cannot run as configured."""

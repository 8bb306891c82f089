"""
Validated configuration schemas for trees, training, search and whole runs.
"""
from enum import Enum
from pathlib import Path
from typing import Optional, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from djinn.core.exceptions import ConfigurationError
from djinn.data.dataset import Task
from djinn.net.losses import LossKind


class InitScheme(str, Enum):
    DJINN = "djinn"
    RANDOM_DENSE = "random_dense"
    RANDOM_SPARSE = "random_sparse"


class TreeConfig(BaseModel):
    """Forest hyper-parameters"""
    model_config = ConfigDict(frozen=True)

    max_depth: int = Field(5, ge=1)
    min_leaf: int = Field(1, ge=1)
    bootstrap: bool = True
    max_features: Union[int, str] = "auto"

    @field_validator("max_features")
    @classmethod
    def check_rule(cls, value: Union[int, str]) -> Union[int, str]:
        if isinstance(value, str) and value not in ("auto", "all", "sqrt"):
            raise ValueError("max_features must be 'auto', 'all', 'sqrt' or a positive int")
        if isinstance(value, int) and value < 1:
            raise ValueError("max_features must be >= 1")
        return value


class TrainingConfig(BaseModel):
    """Back-propagation hyper-parameters (one row of the presets table)"""
    model_config = ConfigDict(frozen=True)

    epochs: int = Field(100, ge=1)
    learning_rate: float = Field(0.006, gt=0)
    batch_size: int = Field(32, ge=1)
    loss: Optional[LossKind] = None
    beta1: float = Field(0.9, ge=0, lt=1)
    beta2: float = Field(0.999, ge=0, lt=1)
    epsilon: float = Field(1e-8, gt=0)
    shuffle_seed: int = 0

    def loss_for(self, task: Task) -> LossKind:
        if self.loss is not None:
            return self.loss
        return LossKind.SOFTMAX_XENT if Task(task) is Task.CLASSIFICATION else LossKind.MSE


class SearchConfig(BaseModel):
    """Bayesian architecture search settings"""
    model_config = ConfigDict(frozen=True)

    budget: int = Field(100, ge=1)
    n_initial: int = Field(10, ge=1)
    n_candidates: int = Field(1000, ge=1)
    validation_fraction: float = Field(0.2, gt=0, lt=1)
    width_lower: int = Field(2, ge=1)
    width_upper: Optional[int] = Field(None, ge=1)

    @model_validator(mode="after")
    def check_budget(self) -> "SearchConfig":
        if self.budget < self.n_initial:
            raise ValueError(
                f"budget {self.budget} is smaller than the initial design {self.n_initial}"
            )
        if self.width_upper is not None and self.width_upper < self.width_lower:
            raise ValueError("width_upper must be >= width_lower")
        return self


class RunConfig(BaseModel):
    """Everything a command needs, validated before any training starts"""
    model_config = ConfigDict(frozen=True)

    data: Path
    target_columns: tuple[str, ...]
    task: Task
    n_trees: int = Field(10, ge=1)
    tree: TreeConfig = TreeConfig()
    training: TrainingConfig = TrainingConfig()
    search: SearchConfig = SearchConfig()
    scheme: InitScheme = InitScheme.DJINN
    seed: int = 0
    n_permutations: int = Field(5, ge=1)
    test_fraction: float = Field(0.2, gt=0, lt=1)
    output_dir: Path = Path("./runs")
    n_jobs: int = Field(1, ge=1)

    @field_validator("target_columns")
    @classmethod
    def check_targets(cls, value: tuple[str, ...]) -> tuple[str, ...]:
        if not value:
            raise ValueError("at least one target column is required")
        return value


def validated(model: type[BaseModel], **values: object) -> BaseModel:
    """Build a config model, surfacing pydantic failures as ConfigurationError."""
    try:
        return model(**values)
    except ValidationError as exc:
        raise ConfigurationError(str(exc)) from exc

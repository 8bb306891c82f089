"""
Per-dataset hyper-parameters: training epochs, learning rate, batch size and
maximum tree depth, all with ten trees.
"""
from dataclasses import dataclass

from djinn.core.exceptions import ConfigurationError
from djinn.data.dataset import Task
from djinn.schemas.config import TrainingConfig, TreeConfig


@dataclass(frozen=True)
class Preset:
    name: str
    task: Task
    epochs: int
    learning_rate: float
    batch_size: int
    max_depth: int
    n_trees: int = 10

    def training(self, shuffle_seed: int = 0) -> TrainingConfig:
        return TrainingConfig(
            epochs=self.epochs,
            learning_rate=self.learning_rate,
            batch_size=self.batch_size,
            shuffle_seed=shuffle_seed,
        )

    def tree(self) -> TreeConfig:
        return TreeConfig(max_depth=self.max_depth)


PRESETS: dict[str, Preset] = {
    preset.name: preset
    for preset in (
        Preset("boston", Task.REGRESSION, 300, 0.006, 21, 5),
        Preset("ca-housing", Task.REGRESSION, 200, 0.006, 826, 5),
        Preset("diabetes", Task.REGRESSION, 50, 0.0001, 1, 5),
        Preset("yield", Task.REGRESSION, 300, 0.008, 1857, 5),
        Preset("iris", Task.CLASSIFICATION, 100, 0.006, 6, 3),
        Preset("digits", Task.CLASSIFICATION, 300, 0.003, 72, 3),
        Preset("wine", Task.CLASSIFICATION, 50, 0.004, 8, 3),
        Preset("breast-cancer", Task.CLASSIFICATION, 100, 0.006, 7, 4),
    )
}


def get_preset(name: str) -> Preset:
    try:
        return PRESETS[name]
    except KeyError:
        raise ConfigurationError(
            f"unknown preset {name!r}; choose from {', '.join(sorted(PRESETS))}"
        ) from None

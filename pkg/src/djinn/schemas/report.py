"""
Evaluation report: cross-validated metrics plus t-test p-values against a
reference model.
"""
from typing import Optional

from pydantic import BaseModel, Field

from djinn.data.dataset import Task


class MetricSummary(BaseModel):
    mean: float
    std: float = Field(ge=0)
    scores: list[float]


class EvalReport(BaseModel):
    model: str
    task: Task
    metrics: dict[str, MetricSummary]
    p_values: dict[str, float] = {}
    reference: Optional[str] = None
    architectures: list[list[list[int]]] = []

    @property
    def n_permutations(self) -> int:
        first = next(iter(self.metrics.values()), None)
        return 0 if first is None else len(first.scores)

    def scores(self, metric: str) -> list[float]:
        return self.metrics[metric].scores

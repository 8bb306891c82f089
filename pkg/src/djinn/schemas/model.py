"""
JSON shapes of trained models. Weights are row-major nested lists, one matrix
of shape (n_out_of_layer, n_in_of_layer) per layer.
"""
from typing import Optional

from pydantic import BaseModel, model_validator

from djinn.data.dataset import Task


class ScalerSchema(BaseModel):
    min: list[float]
    max: list[float]


class NetworkSchema(BaseModel):
    widths: list[int]
    weights: list[list[list[float]]]
    biases: list[list[float]]
    task: Task
    scaler: Optional[ScalerSchema] = None

    @model_validator(mode="after")
    def check_shapes(self) -> "NetworkSchema":
        if len(self.weights) != len(self.widths) - 1 or len(self.biases) != len(self.weights):
            raise ValueError("need one weight matrix and one bias vector per layer")
        for layer, (w, b) in enumerate(zip(self.weights, self.biases)):
            rows, cols = self.widths[layer + 1], self.widths[layer]
            if len(w) != rows or any(len(r) != cols for r in w) or len(b) != rows:
                raise ValueError(f"layer {layer + 1} does not match widths {self.widths}")
        return self


class EnsembleSchema(BaseModel):
    task: Task
    n_classes: int = 0
    scheme: str
    member_seeds: list[int]
    scaler: ScalerSchema
    target_scaler: Optional[ScalerSchema] = None
    members: list[NetworkSchema]


class InitializedNetworkSchema(BaseModel):
    """A mapped network before training; unity lists (row, col) per layer."""
    widths: list[int]
    weights: list[list[list[float]]]
    biases: list[list[float]]
    unity: list[list[tuple[int, int]]]
    roles: list[list[str]]
    pruned: int = 0

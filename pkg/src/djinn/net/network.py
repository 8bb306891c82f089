"""
Dense feed-forward network: ReLU hidden layers, affine output layer.

W^l has shape (n(l), n(l-1)) and layer l computes h^l = ReLU(W^l h^{l-1} + b^l).
Rows of the feature matrix are samples, so the batched form is H @ W.T + b.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

import numpy as np
from numpy.typing import NDArray

from djinn.core.exceptions import TrainingError
from djinn.data.dataset import Task
from djinn.net.losses import LossKind, evaluate_loss, softmax

Matrix = NDArray[np.float64]


@dataclass(eq=False)
class Network:
    weights: list[Matrix]
    biases: list[Matrix]
    task: Task = Task.REGRESSION

    def __post_init__(self) -> None:
        self.task = Task(self.task)
        self.weights = [np.array(w, dtype=np.float64) for w in self.weights]
        self.biases = [np.array(b, dtype=np.float64).reshape(-1) for b in self.biases]
        if not self.weights:
            raise TrainingError("a network needs at least one layer")
        if len(self.weights) != len(self.biases):
            raise TrainingError(
                f"{len(self.weights)} weight matrices but {len(self.biases)} bias vectors"
            )
        for layer, (w, b) in enumerate(zip(self.weights, self.biases), start=1):
            if w.ndim != 2 or b.shape[0] != w.shape[0]:
                raise TrainingError(f"layer {layer}: weight {w.shape} and bias {b.shape} disagree")
            if layer > 1 and w.shape[1] != self.weights[layer - 2].shape[0]:
                raise TrainingError(
                    f"layer {layer} expects {w.shape[1]} inputs but layer {layer - 1} "
                    f"has {self.weights[layer - 2].shape[0]} neurons"
                )

    @property
    def widths(self) -> tuple[int, ...]:
        return (self.weights[0].shape[1], *(w.shape[0] for w in self.weights))

    @property
    def n_in(self) -> int:
        return int(self.weights[0].shape[1])

    @property
    def n_out(self) -> int:
        return int(self.weights[-1].shape[0])

    def parameters(self) -> list[Matrix]:
        """Weights then biases, in layer order; the optimizer updates these in place."""
        return [*self.weights, *self.biases]

    def copy(self) -> Network:
        return Network(
            weights=[w.copy() for w in self.weights],
            biases=[b.copy() for b in self.biases],
            task=self.task,
        )

    def is_finite(self) -> bool:
        return all(np.all(np.isfinite(p)) for p in self.parameters())


@dataclass
class Gradients:
    weights: list[Matrix] = field(default_factory=list)
    biases: list[Matrix] = field(default_factory=list)

    def as_list(self) -> list[Matrix]:
        return [*self.weights, *self.biases]


def _check_input(net: Network, features: Matrix) -> Matrix:
    x = np.asarray(features, dtype=np.float64)
    if x.ndim == 1:
        x = x.reshape(1, -1)
    if x.shape[1] != net.n_in:
        raise TrainingError(f"network expects {net.n_in} features, got {x.shape[1]}")
    if not np.all(np.isfinite(x)):
        raise TrainingError("input contains NaN or Inf")
    return x


def _forward_trace(net: Network, x: Matrix) -> tuple[list[Matrix], list[Matrix]]:
    """Pre-activations and activations of every layer (activations[0] is the input)."""
    activations = [x]
    pre = []
    last = len(net.weights) - 1
    for layer, (w, b) in enumerate(zip(net.weights, net.biases)):
        z = activations[-1] @ w.T + b
        pre.append(z)
        activations.append(z if layer == last else np.maximum(z, 0.0))
    return pre, activations


def forward(net: Network, features: Matrix) -> Matrix:
    """Raw outputs: predictions for regression, logits for classification."""
    _, activations = _forward_trace(net, _check_input(net, features))
    return activations[-1]


def backward(
    net: Network, pre: list[Matrix], activations: list[Matrix], output_grad: Matrix
) -> Gradients:
    """Reverse-mode accumulation; the ReLU derivative at exactly 0 is 0."""
    grads = Gradients(weights=[None] * len(net.weights), biases=[None] * len(net.biases))  # type: ignore[list-item]
    delta = output_grad
    for layer in range(len(net.weights) - 1, -1, -1):
        grads.weights[layer] = delta.T @ activations[layer]
        grads.biases[layer] = delta.sum(axis=0)
        if layer > 0:
            delta = (delta @ net.weights[layer]) * (pre[layer - 1] > 0.0)
    return grads


def loss_outputs_and_gradient(
    net: Network, batch_features: Matrix, batch_targets: Matrix, loss: Union[LossKind, str]
) -> tuple[float, Matrix, Gradients]:
    x = _check_input(net, batch_features)
    if x.shape[0] == 0:
        raise TrainingError("empty batch")
    targets = np.asarray(batch_targets, dtype=np.float64)
    if targets.ndim == 1:
        targets = targets.reshape(-1, 1)
    pre, activations = _forward_trace(net, x)
    outputs = activations[-1]
    cost, output_grad = evaluate_loss(LossKind(loss), outputs, targets)
    return cost, outputs, backward(net, pre, activations, output_grad)


def loss_and_gradient(
    net: Network, batch_features: Matrix, batch_targets: Matrix, loss: Union[LossKind, str]
) -> tuple[float, Gradients]:
    """Mean batch cost and its gradient with respect to every parameter."""
    cost, _, grads = loss_outputs_and_gradient(net, batch_features, batch_targets, loss)
    return cost, grads


def predict(net: Network, features: Matrix, task: Union[Task, str, None] = None) -> Matrix:
    """Regression returns raw outputs; classification returns softmax probabilities."""
    outputs = forward(net, features)
    if Task(task or net.task) is Task.CLASSIFICATION:
        return softmax(outputs)
    return outputs

"""
Tree-to-network weight initialization.

The decision paths are walked a second time (the first walk produced the
topology): inputs are carried forward by unity weights while the tree still
splits on them, every branch claims a new neuron fed by its parent's neuron
and its split feature, and every leaf connects its parent's neuron forward
through the remaining hidden layers to the output layer.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import numpy as np
from numpy.typing import NDArray

from djinn.core.exceptions import MappingError
from djinn.data.dataset import Task
from djinn.mapping.architecture import Architecture, architecture_from_topology, xavier_sigma
from djinn.net.network import Network
from djinn.tree.cart import DecisionTree, TreeNode
from djinn.tree.topology import TreeTopology

Matrix = NDArray[np.float64]


class NeuronRole(str, Enum):
    PASSTHROUGH = "passthrough"
    DECISION = "decision"
    FREE = "free"


@dataclass(eq=False)
class InitializedNetwork:
    """
    weights[l-1] is W^l with shape (n(l), n(l-1)); unity[l-1] marks its
    passthrough entries; roles[l-1] tags the neurons of hidden layer l.
    """
    architecture: Architecture
    weights: list[Matrix]
    biases: list[Matrix]
    unity: list[NDArray[np.bool_]]
    roles: list[tuple[NeuronRole, ...]] = field(default_factory=list)
    pruned: int = 0

    def __post_init__(self) -> None:
        shapes = self.architecture.layer_shapes()
        if len(self.weights) != len(shapes) or len(self.biases) != len(shapes):
            raise MappingError(f"expected {len(shapes)} layers, got {len(self.weights)}")
        for layer, (w, b, u, shape) in enumerate(
            zip(self.weights, self.biases, self.unity, shapes), start=1
        ):
            if w.shape != shape or b.shape != (shape[0],) or u.shape != shape:
                raise MappingError(f"layer {layer} does not match shape {shape}")
            if not np.all(w[u] == 1.0):
                raise MappingError(f"layer {layer} has a passthrough entry different from 1")
        if not self.roles:
            self.roles = assign_roles(self.weights, self.unity)

    def to_network(self, task: Task) -> Network:
        return Network(
            weights=[w.copy() for w in self.weights],
            biases=[b.copy() for b in self.biases],
            task=task,
        )


def assign_roles(weights: list[Matrix], unity: list[NDArray[np.bool_]]) -> list[tuple[NeuronRole, ...]]:
    roles = []
    for w, u in zip(weights[:-1], unity[:-1]):
        layer_roles = []
        for j in range(w.shape[0]):
            if u[j].any():
                layer_roles.append(NeuronRole.PASSTHROUGH)
            elif np.any(w[j] != 0.0):
                layer_roles.append(NeuronRole.DECISION)
            else:
                layer_roles.append(NeuronRole.FREE)
        roles.append(tuple(layer_roles))
    return roles


class _PathMapper:
    """Second recursion over the decision paths, left child first."""

    def __init__(
        self,
        tree: DecisionTree,
        topology: TreeTopology,
        architecture: Architecture,
        rng: np.random.Generator,
    ) -> None:
        self.tree = tree
        self.topology = topology
        self.widths = architecture.widths
        self.n_hidden = architecture.n_hidden
        self.rng = rng
        shapes = architecture.layer_shapes()
        self.weights = [np.zeros(shape) for shape in shapes]
        self.unity = [np.zeros(shape, dtype=bool) for shape in shapes]
        self.written = [np.zeros(shape, dtype=bool) for shape in shapes]
        self.sigmas = [xavier_sigma(cols, rows) for rows, cols in shapes]
        # next unclaimed "new" neuron per hidden layer (index 0 unused)
        self.next_slot = [0] + [self.widths[l - 1] for l in range(1, self.n_hidden + 1)]

    def set_unity(self, layer: int, row: int, col: int) -> None:
        self.weights[layer - 1][row, col] = 1.0
        self.unity[layer - 1][row, col] = True
        self.written[layer - 1][row, col] = True

    def sample(self, layer: int, row: int, col: int) -> None:
        # first writer wins
        if self.written[layer - 1][row, col]:
            return
        self.weights[layer - 1][row, col] = self.rng.normal(0.0, self.sigmas[layer - 1])
        self.written[layer - 1][row, col] = True

    def passthrough(self) -> None:
        if self.topology.D_b == 0:
            for i in range(self.widths[0]):
                self.set_unity(1, i, i)
            return
        for feature, deepest in self.topology.L_max.items():
            for layer in range(1, deepest):
                self.set_unity(layer, feature, feature)

    def output_neurons(self, leaf: TreeNode) -> range:
        if self.tree.task is Task.CLASSIFICATION:
            if leaf.label is None or not 0 <= leaf.label < self.widths[-1]:
                raise MappingError(f"leaf at level {leaf.level} has invalid class {leaf.label}")
            return range(leaf.label, leaf.label + 1)
        return range(self.widths[-1])

    def visit(self, node: TreeNode, parent: int) -> None:
        """`parent` is the neuron of node's parent branch, in layer node.level - 1."""
        if node.is_leaf:
            for layer in range(node.level, self.n_hidden + 1):
                self.sample(layer, parent, parent)
            for out in self.output_neurons(node):
                self.sample(self.n_hidden + 1, out, parent)
            return

        layer = node.level
        if layer > self.topology.D_b:
            raise MappingError(f"branch at level {layer} is deeper than D_b={self.topology.D_b}")
        new = self.next_slot[layer]
        if new >= self.widths[layer]:
            raise MappingError(f"layer {layer} has no free slot for another branch; topology mismatch")
        self.next_slot[layer] += 1
        self.sample(layer, new, parent)
        self.sample(layer, new, int(node.feature_index))  # type: ignore[arg-type]
        left, right = node.children()
        self.visit(left, new)
        self.visit(right, new)

    def run(self) -> None:
        self.passthrough()
        root = self.tree.root
        if root.is_leaf:
            raise MappingError("tree is a single leaf")
        left, right = root.children()
        # the root's neuron is its split feature in the input layer
        self.visit(left, int(root.feature_index))  # type: ignore[arg-type]
        self.visit(right, int(root.feature_index))  # type: ignore[arg-type]
        for layer in range(1, self.topology.D_b + 1):
            if self.next_slot[layer] != self.widths[layer]:
                raise MappingError(
                    f"layer {layer} claimed {self.next_slot[layer] - self.widths[layer - 1]} new "
                    f"neurons, topology promised {self.widths[layer] - self.widths[layer - 1]}"
                )

    def biases(self) -> list[Matrix]:
        biases = []
        for layer, sigma in enumerate(self.sigmas, start=1):
            if self.topology.D_b == 0 and layer == 1:
                biases.append(np.zeros(self.widths[1]))
            else:
                biases.append(self.rng.normal(0.0, sigma, size=self.widths[layer]))
        return biases


def map_tree(
    tree: DecisionTree, topology: TreeTopology, n_in: int, n_out: int, rng_seed: int
) -> InitializedNetwork:
    """Initialize a network from a tree; deterministic in (tree, rng_seed)."""
    if topology.D_b >= tree.max_depth:
        raise MappingError(f"topology depth {topology.D_t} does not fit max_depth {tree.max_depth}")
    architecture = architecture_from_topology(topology, n_in, n_out)
    mapper = _PathMapper(tree, topology, architecture, np.random.default_rng(rng_seed))
    mapper.run()
    return InitializedNetwork(
        architecture=architecture,
        weights=mapper.weights,
        biases=mapper.biases(),
        unity=mapper.unity,
    )

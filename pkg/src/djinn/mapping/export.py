"""
Mapped-network serialization: JSON (row-major weights) and Graphviz DOT with
one node per neuron and one edge per nonzero weight.
"""
from __future__ import annotations

from typing import Optional, Sequence

import numpy as np
from graphviz import Digraph
from numpy.typing import NDArray

from djinn.mapping.architecture import Architecture
from djinn.mapping.initializer import InitializedNetwork, NeuronRole
from djinn.schemas.model import InitializedNetworkSchema


def initialized_to_schema(net: InitializedNetwork) -> InitializedNetworkSchema:
    return InitializedNetworkSchema(
        widths=list(net.architecture.widths),
        weights=[w.tolist() for w in net.weights],
        biases=[b.tolist() for b in net.biases],
        unity=[[(int(r), int(c)) for r, c in np.argwhere(u)] for u in net.unity],
        roles=[[role.value for role in layer] for layer in net.roles],
        pruned=net.pruned,
    )


def initialized_from_schema(schema: InitializedNetworkSchema) -> InitializedNetwork:
    widths = schema.widths
    architecture = Architecture(n_in=widths[0], hidden_widths=tuple(widths[1:-1]), n_out=widths[-1])
    weights = [
        np.asarray(w, dtype=np.float64).reshape(shape)
        for w, shape in zip(schema.weights, architecture.layer_shapes())
    ]
    unity = []
    for entries, shape in zip(schema.unity, architecture.layer_shapes()):
        mask = np.zeros(shape, dtype=bool)
        for row, col in entries:
            mask[row, col] = True
        unity.append(mask)
    return InitializedNetwork(
        architecture=architecture,
        weights=weights,
        biases=[np.asarray(b, dtype=np.float64) for b in schema.biases],
        unity=unity,
        roles=[tuple(NeuronRole(r) for r in layer) for layer in schema.roles],
        pruned=schema.pruned,
    )


def _layer_name(layer: int, n_layers: int) -> str:
    if layer == 0:
        return "input"
    if layer == n_layers - 1:
        return "output"
    return f"hidden {layer}"


def network_to_dot(
    weights: Sequence[NDArray[np.float64]],
    unity: Optional[Sequence[NDArray[np.bool_]]] = None,
    name: str = "network",
) -> str:
    """
    Neuron j of layer l is node "l_j". Unity weights are drawn bold, sampled
    ones plain; zero weights have no edge.
    """
    widths = [weights[0].shape[1], *(w.shape[0] for w in weights)]
    graph = Digraph(name=name)
    graph.attr(rankdir="LR")
    graph.attr("node", shape="circle", fontname="Helvetica")
    for layer, width in enumerate(widths):
        with graph.subgraph(name=f"cluster_{layer}") as sub:
            sub.attr(label=_layer_name(layer, len(widths)), color="lightgrey")
            for j in range(width):
                sub.node(f"{layer}_{j}", f"x{j}" if layer == 0 else str(j))

    for layer, w in enumerate(weights, start=1):
        mask = unity[layer - 1] if unity is not None else np.zeros(w.shape, dtype=bool)
        for row, col in np.argwhere(w != 0.0):
            if mask[row, col]:
                graph.edge(f"{layer - 1}_{col}", f"{layer}_{row}", penwidth="2")
            else:
                graph.edge(f"{layer - 1}_{col}", f"{layer}_{row}", label=f"{w[row, col]:.3g}")
    return graph.source


def initialized_to_dot(net: InitializedNetwork, name: str = "djinn") -> str:
    return network_to_dot(net.weights, net.unity, name=name)

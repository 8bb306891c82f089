"""
Removal of hidden neurons that cannot learn: no incoming weight and a
negative bias keep a ReLU unit at zero for every input.
"""
from __future__ import annotations

import numpy as np
from loguru import logger

from djinn.core.exceptions import MappingError
from djinn.core.monitoring import NEURONS_PRUNED
from djinn.mapping.architecture import Architecture
from djinn.mapping.initializer import InitializedNetwork


def prune_dead_neurons(net: InitializedNetwork) -> InitializedNetwork:
    """Returns a new network; the input is left untouched."""
    weights = [w.copy() for w in net.weights]
    biases = [b.copy() for b in net.biases]
    unity = [u.copy() for u in net.unity]
    removed = 0

    for layer in range(1, net.architecture.n_hidden + 1):
        w, b = weights[layer - 1], biases[layer - 1]
        dead = ~np.any(w != 0.0, axis=1) & (b < 0.0)
        if not dead.any():
            continue
        keep = ~dead
        if not keep.any():
            raise MappingError(
                f"pruning would empty hidden layer {layer} (all {w.shape[0]} neurons are dead)"
            )
        weights[layer - 1] = w[keep]
        biases[layer - 1] = b[keep]
        unity[layer - 1] = unity[layer - 1][keep]
        weights[layer] = weights[layer][:, keep]
        unity[layer] = unity[layer][:, keep]
        removed += int(dead.sum())
        logger.debug(f"Pruned {int(dead.sum())} dead neurons from hidden layer {layer}")

    if removed:
        NEURONS_PRUNED.inc(removed)
    architecture = Architecture(
        n_in=net.architecture.n_in,
        hidden_widths=tuple(w.shape[0] for w in weights[:-1]),
        n_out=net.architecture.n_out,
    )
    return InitializedNetwork(
        architecture=architecture,
        weights=weights,
        biases=biases,
        unity=unity,
        pruned=net.pruned + removed,
    )

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from djinn.mapping.initializer import InitializedNetwork


@dataclass(frozen=True)
class InitStats:
    """Per-layer weight counts of an initialized network, W^1 first."""
    nonzero: tuple[int, ...]
    unity: tuple[int, ...]
    pruned: int = 0

    def __post_init__(self) -> None:
        if len(self.nonzero) != len(self.unity):
            raise ValueError("nonzero and unity counts cover different layers")
        if any(n < u for n, u in zip(self.nonzero, self.unity)):
            raise ValueError("a layer cannot hold more unity weights than nonzero weights")

    @property
    def sampled(self) -> tuple[int, ...]:
        return tuple(n - u for n, u in zip(self.nonzero, self.unity))

    def to_dict(self) -> dict:
        return {"nonzero": list(self.nonzero), "unity": list(self.unity), "pruned": self.pruned}


def init_stats(net: InitializedNetwork) -> InitStats:
    return InitStats(
        nonzero=tuple(int(np.count_nonzero(w)) for w in net.weights),
        unity=tuple(int(np.count_nonzero(u & (w == 1.0))) for w, u in zip(net.weights, net.unity)),
        pruned=net.pruned,
    )

"""
Network architecture derived from a tree topology.

Each hidden layer copies the previous one and adds one neuron per branch at
the matching tree level: n(l) = n(l-1) + N_b(l).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from djinn.core.exceptions import MappingError
from djinn.tree.topology import TreeTopology


@dataclass(frozen=True)
class Architecture:
    n_in: int
    hidden_widths: tuple[int, ...]
    n_out: int

    def __post_init__(self) -> None:
        if self.n_in < 1 or self.n_out < 1:
            raise MappingError(f"input/output widths must be >= 1, got {self.n_in}/{self.n_out}")
        if not self.hidden_widths or min(self.hidden_widths) < 1:
            raise MappingError(f"need at least one non-empty hidden layer, got {self.hidden_widths}")
        object.__setattr__(self, "hidden_widths", tuple(int(w) for w in self.hidden_widths))

    @property
    def widths(self) -> tuple[int, ...]:
        """All layer widths, input first and output last."""
        return (self.n_in, *self.hidden_widths, self.n_out)

    @property
    def n_hidden(self) -> int:
        return len(self.hidden_widths)

    def layer_shapes(self) -> list[tuple[int, int]]:
        """(rows, cols) of W^1 ... W^{n_hidden+1}."""
        widths = self.widths
        return [(widths[l], widths[l - 1]) for l in range(1, len(widths))]


def xavier_sigma(n_prev: int, n_cur: int) -> float:
    """Standard deviation of the sampled weights: sqrt(3 / (n_prev + n_cur))."""
    if n_prev < 1 or n_cur < 1:
        raise MappingError(f"layer widths must be positive, got ({n_prev}, {n_cur})")
    return math.sqrt(3.0 / (n_prev + n_cur))


def architecture_from_topology(topology: TreeTopology, n_in: int, n_out: int) -> Architecture:
    """
    D_b hidden layers with n(0) = n_in. A stump (D_b = 0) gets a single
    identity hidden layer of width n_in.
    """
    split_on = len(topology.L_max)
    if n_in < split_on or (topology.L_max and max(topology.L_max) >= n_in):
        raise MappingError(
            f"n_in={n_in} is smaller than the features split on ({sorted(topology.L_max)})"
        )
    if topology.D_b == 0:
        return Architecture(n_in=n_in, hidden_widths=(n_in,), n_out=n_out)

    widths = []
    width = n_in
    for level in range(1, topology.D_b + 1):
        width += topology.N_b[level]
        widths.append(width)
    return Architecture(n_in=n_in, hidden_widths=tuple(widths), n_out=n_out)

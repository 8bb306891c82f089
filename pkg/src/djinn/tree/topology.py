"""
Structural summary of a tree: the first of the two passes over its decision
paths, which fixes the network architecture before any weight is set.
"""
from __future__ import annotations

from dataclasses import dataclass

from djinn.core.exceptions import TreeError
from djinn.tree.cart import DecisionTree


@dataclass(frozen=True)
class TreeTopology:
    """
    D_t: deepest branch level + 1. D_b = D_t - 1.
    N_b: branch count per level 0..D_t (last entry always 0).
    L_max: feature index -> deepest level it is split on. Features never split
    on are absent.
    """
    D_t: int
    N_b: tuple[int, ...]
    L_max: dict[int, int]

    def __post_init__(self) -> None:
        if len(self.N_b) != self.D_t + 1:
            raise TreeError(f"N_b needs {self.D_t + 1} entries, got {len(self.N_b)}")
        if self.N_b[self.D_t] != 0:
            raise TreeError("the deepest level of a tree holds only leaves")
        if any(level > self.D_b for level in self.L_max.values()):
            raise TreeError("L_max exceeds the maximum branch depth")

    @property
    def D_b(self) -> int:
        return self.D_t - 1

    @property
    def n_branches(self) -> int:
        return sum(self.N_b)

    def carries(self, feature: int, layer: int) -> bool:
        """True when input `feature` is passed through into hidden `layer`."""
        return layer < self.L_max.get(feature, 0)


def analyze_topology(tree: DecisionTree) -> TreeTopology:
    counts: dict[int, int] = {}
    l_max: dict[int, int] = {}
    for node in tree.nodes():
        if node.is_leaf:
            continue
        counts[node.level] = counts.get(node.level, 0) + 1
        feature = int(node.feature_index)  # type: ignore[arg-type]
        l_max[feature] = max(l_max.get(feature, node.level), node.level)
    if not counts:
        raise TreeError("tree is a single leaf; it has no branches to map")

    d_t = max(counts) + 1
    n_b = tuple(counts.get(level, 0) for level in range(d_t + 1))
    return TreeTopology(D_t=d_t, N_b=n_b, L_max=dict(sorted(l_max.items())))

"""
Greedy CART decision trees.

Regression splits minimize the summed per-output sum of squared errors of the
two children; classification splits minimize the weighted Gini impurity.
Candidate thresholds are midpoints between consecutive sorted unique values,
ties go to the lowest feature index and then the smallest threshold, and rows
with x[feature] <= threshold go left.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, Optional, Union

import numpy as np
from numpy.typing import NDArray

from djinn.core.exceptions import TreeError
from djinn.data.dataset import Task
from djinn.monitoring import track_tree_fit

# relative slack when comparing split impurities, keeps tie-breaking stable
# against summation-order noise
_TIE_TOLERANCE = 1e-12


class NodeKind(str, Enum):
    BRANCH = "branch"
    LEAF = "leaf"


@dataclass(frozen=True, eq=False)
class TreeNode:
    kind: NodeKind
    level: int
    feature_index: Optional[int] = None
    threshold: Optional[float] = None
    left: Optional[TreeNode] = None
    right: Optional[TreeNode] = None
    value: NDArray[np.float64] = field(default_factory=lambda: np.zeros(0))
    label: Optional[int] = None
    n_samples: int = 0

    @classmethod
    def branch(
        cls,
        level: int,
        feature_index: int,
        threshold: float,
        left: TreeNode,
        right: TreeNode,
        n_samples: int = 0,
    ) -> TreeNode:
        return cls(
            kind=NodeKind.BRANCH,
            level=level,
            feature_index=int(feature_index),
            threshold=float(threshold),
            left=left,
            right=right,
            n_samples=n_samples,
        )

    @classmethod
    def leaf(
        cls,
        level: int,
        value: Union[NDArray[np.float64], list[float], float],
        label: Optional[int] = None,
        n_samples: int = 0,
    ) -> TreeNode:
        return cls(
            kind=NodeKind.LEAF,
            level=level,
            value=np.atleast_1d(np.asarray(value, dtype=np.float64)),
            label=None if label is None else int(label),
            n_samples=n_samples,
        )

    @property
    def is_leaf(self) -> bool:
        return self.kind is NodeKind.LEAF

    def children(self) -> tuple[TreeNode, TreeNode]:
        if self.left is None or self.right is None:
            raise TreeError(f"leaf at level {self.level} has no children")
        return self.left, self.right

    def walk(self) -> Iterator[TreeNode]:
        """Depth-first, left child first."""
        stack: list[TreeNode] = [self]
        while stack:
            node = stack.pop()
            yield node
            if not node.is_leaf:
                left, right = node.children()
                stack.append(right)
                stack.append(left)


@dataclass(frozen=True, eq=False)
class DecisionTree:
    root: TreeNode
    max_depth: int
    n_features: int
    task: Task
    n_outputs: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "task", Task(self.task))
        if self.root.level != 0:
            raise TreeError(f"root must sit at level 0, got {self.root.level}")
        for node in self.root.walk():
            if node.is_leaf:
                if node.left is not None or node.right is not None:
                    raise TreeError(f"leaf at level {node.level} has children")
                continue
            if node.level >= self.max_depth:
                raise TreeError(
                    f"branch at level {node.level} violates max_depth {self.max_depth}"
                )
            if node.feature_index is None or not 0 <= node.feature_index < self.n_features:
                raise TreeError(
                    f"branch feature {node.feature_index} out of range for "
                    f"{self.n_features} features"
                )
            for child in node.children():
                if child.level != node.level + 1:
                    raise TreeError(
                        f"child at level {child.level} under parent at level {node.level}"
                    )

    def nodes(self) -> Iterator[TreeNode]:
        return self.root.walk()

    @property
    def n_branches(self) -> int:
        return sum(1 for node in self.nodes() if not node.is_leaf)


class _Builder:
    """Recursive CART growth over index subsets of a fixed training set."""

    def __init__(
        self,
        x: NDArray[np.float64],
        y: NDArray[np.float64],
        task: Task,
        n_classes: int,
        max_depth: int,
        min_leaf: int,
        max_features: int,
        rng: np.random.Generator,
    ) -> None:
        self.x = x
        self.y = y
        self.task = task
        self.n_classes = n_classes
        self.max_depth = max_depth
        self.min_leaf = min_leaf
        self.max_features = max_features
        self.rng = rng
        if task is Task.CLASSIFICATION:
            self.labels = y[:, 0].astype(np.int64)
            self.onehot = np.eye(n_classes)[self.labels]

    def make_leaf(self, idx: NDArray[np.int64], level: int) -> TreeNode:
        if self.task is Task.CLASSIFICATION:
            counts = np.bincount(self.labels[idx], minlength=self.n_classes)
            return TreeNode.leaf(
                level, counts / counts.sum(), label=int(np.argmax(counts)), n_samples=idx.size
            )
        return TreeNode.leaf(level, self.y[idx].mean(axis=0), n_samples=idx.size)

    def is_pure(self, idx: NDArray[np.int64]) -> bool:
        if self.task is Task.CLASSIFICATION:
            return bool(np.all(self.labels[idx] == self.labels[idx[0]]))
        return bool(np.all(self.y[idx] == self.y[idx[0]]))

    def candidate_features(self) -> NDArray[np.int64]:
        n_features = self.x.shape[1]
        if self.max_features >= n_features:
            return np.arange(n_features)
        chosen = self.rng.choice(n_features, size=self.max_features, replace=False)
        return np.sort(chosen)

    def split_scores(
        self, idx: NDArray[np.int64], feature: int
    ) -> Optional[tuple[float, float]]:
        """Best (impurity, threshold) for one feature, or None if unsplittable."""
        values = self.x[idx, feature]
        order = np.argsort(values, kind="stable")
        xs = values[order]
        m = xs.size
        left_n = np.arange(1, m, dtype=np.float64)
        right_n = m - left_n

        valid = xs[:-1] < xs[1:]
        valid &= (left_n >= self.min_leaf) & (right_n >= self.min_leaf)
        if not valid.any():
            return None

        if self.task is Task.CLASSIFICATION:
            running = np.cumsum(self.onehot[idx][order], axis=0)
            counts = running[:-1]
            right = running[-1] - counts
            impurity = (left_n - (counts**2).sum(axis=1) / left_n) + (
                right_n - (right**2).sum(axis=1) / right_n
            )
        else:
            ys = self.y[idx][order]
            csum = np.cumsum(ys, axis=0)
            csq = np.cumsum(ys**2, axis=0)
            lsum, lsq = csum[:-1], csq[:-1]
            rsum, rsq = csum[-1] - lsum, csq[-1] - lsq
            impurity = (lsq - lsum**2 / left_n[:, None]).sum(axis=1) + (
                rsq - rsum**2 / right_n[:, None]
            ).sum(axis=1)

        impurity = np.where(valid, impurity, np.inf)
        best = impurity.min()
        slack = _TIE_TOLERANCE * max(1.0, abs(best))
        pos = int(np.flatnonzero(impurity <= best + slack)[0])
        return float(impurity[pos]), float((xs[pos] + xs[pos + 1]) / 2.0)

    def grow(self, idx: NDArray[np.int64], level: int) -> TreeNode:
        if level >= self.max_depth or idx.size < 2 * self.min_leaf or self.is_pure(idx):
            return self.make_leaf(idx, level)

        best: Optional[tuple[float, int, float]] = None
        for feature in self.candidate_features():
            scored = self.split_scores(idx, int(feature))
            if scored is None:
                continue
            impurity, threshold = scored
            if best is None or impurity < best[0] - _TIE_TOLERANCE * max(1.0, abs(best[0])):
                best = (impurity, int(feature), threshold)
        if best is None:
            return self.make_leaf(idx, level)

        _, feature, threshold = best
        goes_left = self.x[idx, feature] <= threshold
        left = self.grow(idx[goes_left], level + 1)
        right = self.grow(idx[~goes_left], level + 1)
        return TreeNode.branch(level, feature, threshold, left, right, n_samples=idx.size)


def resolve_max_features(rule: Union[str, int, None], n_features: int, task: Task) -> int:
    """
    Features examined per split. "auto" is all features for regression and
    ceil(sqrt(n_features)) for classification.
    """
    if rule is None or rule == "all":
        return n_features
    if rule == "sqrt":
        return max(1, int(np.ceil(np.sqrt(n_features))))
    if rule == "auto":
        return n_features if Task(task) is Task.REGRESSION else resolve_max_features(
            "sqrt", n_features, task
        )
    if isinstance(rule, int) and not isinstance(rule, bool) and rule >= 1:
        return min(rule, n_features)
    raise TreeError(f"unknown feature subsampling rule {rule!r}")


@track_tree_fit
def fit_tree(
    features: NDArray[np.float64],
    targets: NDArray[np.float64],
    task: Union[Task, str],
    max_depth: Optional[int],
    min_leaf: int = 1,
    max_features: Union[str, int, None] = None,
    rng_seed: int = 0,
    n_classes: Optional[int] = None,
) -> DecisionTree:
    """
    Fit a CART tree. max_depth=None grows until leaves are pure or min_leaf
    stops the recursion.
    """
    task = Task(task)
    x = np.asarray(features, dtype=np.float64)
    y = np.asarray(targets, dtype=np.float64)
    if y.ndim == 1:
        y = y.reshape(-1, 1)
    if x.ndim != 2 or x.shape[0] == 0:
        raise TreeError("cannot fit a tree on empty data")
    if x.shape[0] != y.shape[0]:
        raise TreeError(f"features have {x.shape[0]} rows but targets have {y.shape[0]}")
    if max_depth is not None and max_depth < 1:
        raise TreeError(f"max_depth must be >= 1, got {max_depth}")
    if min_leaf < 1:
        raise TreeError(f"min_leaf must be >= 1, got {min_leaf}")

    if task is Task.CLASSIFICATION:
        if y.shape[1] != 1:
            raise TreeError("classification trees take a single class-index column")
        n_classes = int(n_classes if n_classes is not None else y.max() + 1)
        n_outputs = n_classes
    else:
        n_classes = 0
        n_outputs = y.shape[1]

    depth_limit = max_depth if max_depth is not None else x.shape[0]
    builder = _Builder(
        x,
        y,
        task,
        n_classes,
        depth_limit,
        min_leaf,
        resolve_max_features(max_features, x.shape[1], task),
        np.random.default_rng(rng_seed),
    )
    root = builder.grow(np.arange(x.shape[0]), 0)
    return DecisionTree(
        root=root,
        max_depth=depth_limit,
        n_features=x.shape[1],
        task=task,
        n_outputs=n_outputs,
    )


def predict_tree(tree: DecisionTree, features: NDArray[np.float64]) -> NDArray:
    """
    Route rows to leaves. Returns an (n, n_targets) matrix for regression and
    an (n,) vector of class indices for classification.
    """
    x = np.asarray(features, dtype=np.float64)
    if x.ndim == 1:
        x = x.reshape(1, -1)
    if x.shape[1] != tree.n_features:
        raise TreeError(f"tree expects {tree.n_features} features, got {x.shape[1]}")

    if tree.task is Task.CLASSIFICATION:
        out: NDArray = np.zeros(x.shape[0], dtype=np.int64)
    else:
        out = np.zeros((x.shape[0], tree.n_outputs), dtype=np.float64)

    stack = [(tree.root, np.arange(x.shape[0]))]
    while stack:
        node, idx = stack.pop()
        if idx.size == 0:
            continue
        if node.is_leaf:
            out[idx] = node.label if tree.task is Task.CLASSIFICATION else node.value
            continue
        left, right = node.children()
        goes_left = x[idx, node.feature_index] <= node.threshold
        stack.append((left, idx[goes_left]))
        stack.append((right, idx[~goes_left]))
    return out

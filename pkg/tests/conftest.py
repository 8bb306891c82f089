import numpy as np
import pandas as pd
import pytest

from djinn.data.dataset import Dataset, Task
from djinn.data.synthetic import make_cliff_peak
from djinn.schemas.config import TrainingConfig, TreeConfig
from djinn.tree.cart import DecisionTree, TreeNode


@pytest.fixture
def three_level_tree():
    """
    Three inputs, two classes. x1 (index 0) at the root, x2 below its right
    side, then one branch on x1 and one on x3 at level 2.
    """
    leaf = TreeNode.leaf
    left_deep = TreeNode.branch(2, 0, 0.25, leaf(3, [1, 0], label=0), leaf(3, [0, 1], label=1))
    right_deep = TreeNode.branch(2, 2, 0.5, leaf(3, [1, 0], label=0), leaf(3, [0, 1], label=1))
    middle = TreeNode.branch(1, 1, 0.5, left_deep, right_deep)
    root = TreeNode.branch(0, 0, 0.5, leaf(1, [1, 0], label=0), middle)
    return DecisionTree(root=root, max_depth=3, n_features=3, task=Task.CLASSIFICATION, n_outputs=2)


@pytest.fixture
def regression_data():
    """Small smooth regression problem on [0, 1]^3."""
    return make_cliff_peak(n_samples=60, n_features=3, seed=7)


@pytest.fixture
def classification_data():
    """Three well separated blobs in 2-D."""
    rng = np.random.default_rng(3)
    centers = np.array([[0.0, 0.0], [4.0, 0.0], [0.0, 4.0]])
    labels = np.repeat(np.arange(3), 20)
    features = centers[labels] + rng.normal(0.0, 0.5, size=(60, 2))
    return Dataset(
        features=features,
        targets=labels.astype(float),
        task=Task.CLASSIFICATION,
        n_classes=3,
        class_labels=("a", "b", "c"),
    )


@pytest.fixture
def quick_training():
    return TrainingConfig(epochs=3, learning_rate=0.01, batch_size=8)


@pytest.fixture
def shallow_trees():
    return TreeConfig(max_depth=3)


@pytest.fixture
def regression_csv(tmp_path, regression_data):
    path = tmp_path / "surface.csv"
    frame = pd.DataFrame(regression_data.features, columns=["a", "b", "c"])
    frame["y"] = regression_data.targets[:, 0]
    frame.to_csv(path, index=False)
    return path


@pytest.fixture
def classification_csv(tmp_path, classification_data):
    path = tmp_path / "blobs.csv"
    frame = pd.DataFrame(classification_data.features, columns=["u", "v"])
    frame["species"] = np.array(["a", "b", "c"])[classification_data.labels]
    frame.to_csv(path, index=False)
    return path

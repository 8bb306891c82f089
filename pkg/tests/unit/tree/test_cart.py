"""
Tests for CART growth and prediction
"""
import numpy as np
import pytest

from djinn.core.exceptions import TreeError
from djinn.data.dataset import Task
from djinn.data.synthetic import logic_gate
from djinn.tree.cart import DecisionTree, TreeNode, fit_tree, predict_tree, resolve_max_features


def test_xor_tree_is_exact():
    """Test that an unlimited tree splits x then y and reproduces XOR"""
    # Arrange
    xor = logic_gate("xor")

    # Act
    tree = fit_tree(xor.features, xor.targets, Task.CLASSIFICATION, max_depth=None)

    # Assert
    assert tree.root.feature_index == 0
    assert tree.root.threshold == pytest.approx(0.5)
    assert tree.n_branches == 3
    np.testing.assert_array_equal(predict_tree(tree, xor.features), xor.labels)


def test_regression_split_uses_midpoint():
    """Test that a depth-1 regression tree cuts between the two plateaus"""
    # Arrange
    x = np.array([[0.0], [1.0], [2.0], [3.0]])
    y = np.array([0.0, 0.0, 5.0, 5.0])

    # Act
    tree = fit_tree(x, y, Task.REGRESSION, max_depth=1)

    # Assert
    assert tree.root.threshold == pytest.approx(1.5)
    np.testing.assert_allclose(predict_tree(tree, [[0.4], [2.6]]), [[0.0], [5.0]])


def test_ties_go_to_lowest_feature_index():
    """Test that identical columns resolve to the first one"""
    x = np.array([[0.0, 0.0], [1.0, 1.0], [2.0, 2.0], [3.0, 3.0]])
    tree = fit_tree(x, [0, 0, 1, 1], Task.CLASSIFICATION, max_depth=2)
    assert tree.root.feature_index == 0


def test_min_leaf_limits_split_positions():
    """Test that no leaf ends up with fewer rows than min_leaf"""
    # Arrange
    rng = np.random.default_rng(0)
    x = rng.uniform(size=(40, 2))
    y = rng.normal(size=40)

    # Act
    tree = fit_tree(x, y, Task.REGRESSION, max_depth=None, min_leaf=5)

    # Assert
    assert all(node.n_samples >= 5 for node in tree.nodes() if node.is_leaf)


def test_classification_leaf_holds_class_fractions(classification_data):
    """Test that leaf values are class fractions summing to one"""
    tree = fit_tree(
        classification_data.features,
        classification_data.targets,
        Task.CLASSIFICATION,
        max_depth=2,
        n_classes=3,
    )
    for node in tree.nodes():
        if node.is_leaf:
            assert node.value.sum() == pytest.approx(1.0)
            assert node.label == int(np.argmax(node.value))


def test_predict_rejects_wrong_feature_count(three_level_tree):
    """Test that prediction checks the input width"""
    with pytest.raises(TreeError, match="expects 3 features"):
        predict_tree(three_level_tree, np.zeros((2, 4)))


def test_tree_rejects_branch_at_max_depth():
    """Test that a branch at level >= max_depth is rejected"""
    root = TreeNode.branch(0, 0, 0.5, TreeNode.leaf(1, 0.0), TreeNode.leaf(1, 1.0))
    with pytest.raises(TreeError, match="max_depth"):
        DecisionTree(root=root, max_depth=0, n_features=1, task=Task.REGRESSION, n_outputs=1)


@pytest.mark.parametrize(
    "rule, task, expected",
    [("auto", Task.REGRESSION, 9), ("auto", Task.CLASSIFICATION, 3), ("sqrt", Task.REGRESSION, 3), (4, Task.REGRESSION, 4), (20, Task.REGRESSION, 9)],
)
def test_resolve_max_features(rule, task, expected):
    """Test the feature subsampling rules"""
    assert resolve_max_features(rule, 9, task) == expected


def test_matches_reference_cart_on_continuous_data():
    """Test that training predictions agree with scikit-learn's CART"""
    # Arrange
    tree_module = pytest.importorskip("sklearn.tree")
    rng = np.random.default_rng(42)
    x = rng.uniform(size=(80, 3))
    y = np.sin(4 * x[:, 0]) + x[:, 1] ** 2 + rng.normal(0, 0.05, 80)

    # Act
    ours = fit_tree(x, y, Task.REGRESSION, max_depth=4)
    reference = tree_module.DecisionTreeRegressor(max_depth=4, random_state=0).fit(x, y)

    # Assert
    np.testing.assert_allclose(predict_tree(ours, x)[:, 0], reference.predict(x), rtol=1e-10)

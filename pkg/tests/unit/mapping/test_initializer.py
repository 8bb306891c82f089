"""
Tests for tree-to-network weight initialization

The three-level classification tree from the shared fixtures gives widths
(3, 4, 6, 2). Its expected nonzero pattern is written out by hand below.
"""
import numpy as np
import pytest

from djinn.core.exceptions import MappingError
from djinn.data.dataset import Task
from djinn.mapping.initializer import InitializedNetwork, NeuronRole, map_tree
from djinn.tree.cart import DecisionTree, TreeNode, fit_tree
from djinn.tree.topology import analyze_topology

EXPECTED_NONZERO = [
    {(0, 0), (2, 2), (3, 0), (3, 1)},
    {(0, 0), (4, 3), (4, 0), (5, 3), (5, 2)},
    {(0, 0), (0, 4), (1, 4), (0, 5), (1, 5)},
]


@pytest.fixture
def three_level_network(three_level_tree):
    return map_tree(three_level_tree, analyze_topology(three_level_tree), n_in=3, n_out=2, rng_seed=0)


def test_nonzero_pattern_matches_decision_paths(three_level_network):
    """Test the exact set of nonzero weights in every layer"""
    for layer, expected in enumerate(EXPECTED_NONZERO, start=1):
        found = {tuple(int(i) for i in rc) for rc in np.argwhere(three_level_network.weights[layer - 1] != 0)}
        assert found == expected, f"layer {layer}"


def test_passthrough_weights_are_unity(three_level_network):
    """Test that inputs split on below level 1 are carried by weights of exactly 1"""
    # Arrange
    w1, u1 = three_level_network.weights[0], three_level_network.unity[0]

    # Assert
    assert {tuple(int(i) for i in rc) for rc in np.argwhere(u1)} == {(0, 0), (2, 2)}
    assert w1[0, 0] == 1.0 and w1[2, 2] == 1.0
    assert not three_level_network.unity[1].any()
    assert not three_level_network.unity[2].any()


def test_neuron_roles(three_level_network):
    """Test that hidden neurons are tagged passthrough, decision or free"""
    P, D, F = NeuronRole.PASSTHROUGH, NeuronRole.DECISION, NeuronRole.FREE
    assert three_level_network.roles == [(P, F, P, D), (D, F, F, F, D, D)]


def test_mapping_is_deterministic(three_level_tree):
    """Test that equal seeds give identical weights and biases"""
    # Arrange
    topology = analyze_topology(three_level_tree)

    # Act
    first = map_tree(three_level_tree, topology, 3, 2, rng_seed=4)
    second = map_tree(three_level_tree, topology, 3, 2, rng_seed=4)
    other = map_tree(three_level_tree, topology, 3, 2, rng_seed=5)

    # Assert
    for a, b in zip(first.weights + first.biases, second.weights + second.biases):
        np.testing.assert_array_equal(a, b)
    assert not np.array_equal(first.weights[1], other.weights[1])


def test_stump_maps_to_identity_layer_without_biases():
    """Test that a single split gives an identity hidden layer with zero biases"""
    # Arrange
    root = TreeNode.branch(0, 1, 0.5, TreeNode.leaf(1, [1, 0], label=0), TreeNode.leaf(1, [0, 1], label=1))
    tree = DecisionTree(root=root, max_depth=1, n_features=2, task=Task.CLASSIFICATION, n_outputs=2)

    # Act
    net = map_tree(tree, analyze_topology(tree), n_in=2, n_out=2, rng_seed=0)

    # Assert
    np.testing.assert_array_equal(net.weights[0], np.eye(2))
    np.testing.assert_array_equal(net.biases[0], np.zeros(2))
    assert {tuple(int(i) for i in rc) for rc in np.argwhere(net.weights[1] != 0)} == {(0, 1), (1, 1)}


def test_regression_leaf_feeds_every_output(regression_data):
    """Test that a regression leaf connects its parent to all output neurons"""
    # Arrange
    targets = np.column_stack([regression_data.targets[:, 0], -regression_data.targets[:, 0]])
    tree = fit_tree(regression_data.features, targets, Task.REGRESSION, max_depth=2)

    # Act
    net = map_tree(tree, analyze_topology(tree), n_in=3, n_out=2, rng_seed=1)

    # Assert
    w_out = net.weights[-1]
    assert np.array_equal(w_out[0] != 0, w_out[1] != 0)


def test_mapping_rejects_topology_deeper_than_tree(three_level_tree):
    """Test that a topology inconsistent with the tree's depth limit is rejected"""
    topology = analyze_topology(three_level_tree)
    shallow = DecisionTree(
        root=TreeNode.branch(0, 0, 0.5, TreeNode.leaf(1, [1, 0], label=0), TreeNode.leaf(1, [0, 1], label=1)),
        max_depth=1,
        n_features=3,
        task=Task.CLASSIFICATION,
        n_outputs=2,
    )
    with pytest.raises(MappingError):
        map_tree(shallow, topology, 3, 2, rng_seed=0)


def test_initialized_network_rejects_non_unity_passthrough(three_level_network):
    """Test that a passthrough entry must hold exactly 1"""
    # Arrange
    weights = [w.copy() for w in three_level_network.weights]
    weights[0][0, 0] = 0.5

    # Act / Assert
    with pytest.raises(MappingError, match="passthrough"):
        InitializedNetwork(three_level_network.architecture, weights, three_level_network.biases, three_level_network.unity)


@pytest.fixture
def deep_tree():
    rng = np.random.default_rng(5)
    x = rng.uniform(size=(400, 6))
    y = np.sin(6 * x[:, 0]) + x[:, 1] * x[:, 2] - x[:, 3] ** 2 + 0.3 * x[:, 5]
    return fit_tree(x, y, Task.REGRESSION, max_depth=6)


def test_sampled_weights_have_xavier_variance(deep_tree):
    """Test that over 1e5 sampled weights, w^2 / (3 / (n_prev + n_cur)) averages to 1 within 5%"""
    # Arrange
    topology = analyze_topology(deep_tree)
    ratios = []
    seed = 0

    # Act
    while sum(r.size for r in ratios) < 100_000:
        net = map_tree(deep_tree, topology, n_in=6, n_out=1, rng_seed=seed)
        widths = net.architecture.widths
        for layer, (w, u) in enumerate(zip(net.weights, net.unity), start=1):
            variance = 3.0 / (widths[layer - 1] + widths[layer])
            sampled = (w != 0.0) & ~u
            ratios.append(w[sampled] ** 2 / variance)
        seed += 1

    # Assert
    assert np.mean(np.concatenate(ratios)) == pytest.approx(1.0, rel=0.05)


def test_deep_split_feature_reaches_its_branch_through_unity_chain(deep_tree):
    """Test that a feature split on at level L arrives unchanged at layer L - 1 and feeds a sampled weight"""
    # Arrange
    net = map_tree(deep_tree, analyze_topology(deep_tree), n_in=6, n_out=1, rng_seed=3)
    deep_branches = [n for n in deep_tree.nodes() if not n.is_leaf and n.level >= 2]
    assert deep_branches

    for node in deep_branches:
        f = int(node.feature_index)
        x = np.zeros(6)
        x[f] = 0.7

        # Act: zero-bias forward pass up to the layer below the branch
        h = x
        for w in net.weights[: node.level - 1]:
            h = np.maximum(w @ h, 0.0)

        # Assert
        assert h[f] == 0.7
        for layer in range(1, node.level):
            assert net.unity[layer - 1][f, f]
        incoming = net.weights[node.level - 1][:, f]
        assert np.any((incoming != 0.0) & ~net.unity[node.level - 1][:, f])

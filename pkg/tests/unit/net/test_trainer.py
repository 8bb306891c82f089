"""
Tests for Adam and the mini-batch training loop
"""
import numpy as np
import pytest

from djinn.core.exceptions import DivergenceError, TrainingError
from djinn.data.dataset import Dataset, Task
from djinn.data.scaling import fit_scaler
from djinn.net.network import Network, forward
from djinn.net.optimizer import Adam
from djinn.net.serialization import network_from_schema, network_to_schema
from djinn.net.trainer import train
from djinn.schemas.config import TrainingConfig


def small_network(n_in=3, n_hidden=6, n_out=1, seed=0):
    rng = np.random.default_rng(seed)
    return Network(
        weights=[rng.normal(0, 0.5, size=(n_hidden, n_in)), rng.normal(0, 0.5, size=(n_out, n_hidden))],
        biases=[np.full(n_hidden, 0.1), np.zeros(n_out)],
    )


def test_adam_ignores_zero_gradients():
    """Test that a zero gradient leaves parameters unchanged"""
    # Arrange
    params = [np.array([1.0, -2.0])]
    optimizer = Adam(params, learning_rate=0.1)

    # Act
    optimizer.step([np.zeros(2)])

    # Assert
    np.testing.assert_array_equal(params[0], [1.0, -2.0])


def test_adam_first_step_moves_by_learning_rate():
    """Test the bias-corrected first step size"""
    params = [np.array([0.0])]
    Adam(params, learning_rate=0.01).step([np.array([3.0])])
    assert params[0][0] == pytest.approx(-0.01, rel=1e-6)


def test_training_is_deterministic(regression_data):
    """Test that equal seeds give identical networks and histories"""
    # Arrange
    config = TrainingConfig(epochs=5, learning_rate=0.01, batch_size=7, shuffle_seed=3)

    # Act
    net_a, hist_a = train(small_network(), regression_data, config)
    net_b, hist_b = train(small_network(), regression_data, config)

    # Assert
    assert hist_a.cost == hist_b.cost
    for a, b in zip(net_a.parameters(), net_b.parameters()):
        np.testing.assert_array_equal(a, b)


def test_training_does_not_touch_the_input_network(regression_data, quick_training):
    """Test that train works on a copy"""
    net = small_network()
    before = [p.copy() for p in net.parameters()]
    train(net, regression_data, quick_training)
    for a, b in zip(before, net.parameters()):
        np.testing.assert_array_equal(a, b)


def test_constant_target_is_learned():
    """Test that a constant target drives the training MSE to near zero"""
    # Arrange
    rng = np.random.default_rng(0)
    data = Dataset(features=rng.uniform(size=(8, 3)), targets=np.full(8, 3.0), task=Task.REGRESSION)
    config = TrainingConfig(epochs=1500, learning_rate=0.01, batch_size=4)

    # Act
    net, history = train(small_network(), data, config)

    # Assert
    assert history.cost[-1] < 1e-3
    np.testing.assert_allclose(forward(net, data.features), 3.0, atol=0.05)


def test_history_tracks_scaled_and_test_cost(regression_data):
    """Test the optional history columns"""
    # Arrange
    config = TrainingConfig(epochs=4, learning_rate=0.01, batch_size=10)
    span = np.ptp(regression_data.targets, axis=0)

    # Act
    _, history = train(small_network(), regression_data, config, target_range=span, eval_set=regression_data)

    # Assert
    frame = history.to_frame()
    assert list(frame.columns) == ["epoch", "cost", "scaled_cost", "test_cost"]
    assert len(frame) == 4
    np.testing.assert_allclose(
        np.asarray(history.scaled_cost) * span[0] ** 2, history.cost, rtol=1e-10
    )


def test_batch_larger_than_data_is_rejected(regression_data):
    """Test that batch_size above the row count raises TrainingError"""
    with pytest.raises(TrainingError, match="batch_size"):
        train(small_network(), regression_data, TrainingConfig(batch_size=61))


def test_width_mismatch_is_rejected(regression_data, quick_training):
    """Test that the network must match the dataset's widths"""
    with pytest.raises(TrainingError, match="network maps"):
        train(small_network(n_in=2), regression_data, quick_training)


def test_overflowing_cost_raises_divergence():
    """Test that a non-finite cost stops training with the epoch and batch"""
    # Arrange
    data = Dataset(features=np.full((4, 1), 1e200), targets=np.zeros(4), task=Task.REGRESSION)
    net = Network(weights=[np.ones((2, 1)), np.ones((1, 2))], biases=[np.zeros(2), np.zeros(1)])

    # Act
    with np.errstate(over="ignore", invalid="ignore"), pytest.raises(DivergenceError) as info:
        train(net, data, TrainingConfig(epochs=2, batch_size=2))

    # Assert
    assert (info.value.epoch, info.value.batch) == (1, 0)


def test_network_schema_round_trip(regression_data):
    """Test that a network and its scaler survive JSON"""
    # Arrange
    net = small_network()
    scaler = fit_scaler(regression_data.features)

    # Act
    restored, restored_scaler = network_from_schema(network_to_schema(net, scaler))

    # Assert
    np.testing.assert_array_equal(forward(restored, regression_data.features), forward(net, regression_data.features))
    np.testing.assert_array_equal(restored_scaler.max, scaler.max)


def test_cost_decreases_on_convex_problem():
    """Test that full-batch linear least squares rarely raises the epoch cost"""
    # Arrange
    rng = np.random.default_rng(2)
    x = rng.uniform(size=(50, 3))
    data = Dataset(features=x, targets=x @ np.array([2.0, -3.0, 1.5]) + 4.0, task=Task.REGRESSION)
    net = Network(weights=[np.zeros((1, 3))], biases=[np.zeros(1)])
    config = TrainingConfig(epochs=100, learning_rate=0.01, batch_size=50)

    # Act
    _, history = train(net, data, config)

    # Assert: at most 5% of epochs may go up
    rises = np.sum(np.diff(history.cost) > 0)
    assert rises <= 0.05 * (config.epochs - 1)
    assert history.cost[-1] < history.cost[0]

"""
Tests for building, predicting with and sweeping DJINN ensembles
"""
from dataclasses import replace

import numpy as np
import pytest

from djinn.core.exceptions import ConfigurationError
from djinn.data.dataset import Task
from djinn.data.scaling import ScalingParams
from djinn.data.splits import make_splits
from djinn.metrics.scores import regression_metrics
from djinn.net.network import Network
from djinn.schemas.config import InitScheme, TrainingConfig
from djinn.services.ensemble_service import (
    DjinnEnsemble,
    build_and_train,
    mean_cost_curves,
    predict_ensemble,
    predict_proba_ensemble,
    sweep_tree_count,
)


def constant_network(outputs, task):
    """A network with no hidden layer whose output is its bias."""
    outputs = np.asarray(outputs, dtype=float)
    return Network(weights=[np.zeros((outputs.size, 1))], biases=[outputs], task=task)


def test_regression_prediction_is_member_mean():
    """Test that the ensemble averages member outputs"""
    # Arrange
    ensemble = DjinnEnsemble(
        members=(constant_network([1.0], "regression"), constant_network([3.0], "regression")),
        member_seeds=(0, 1),
        scaler=ScalingParams(min=[0.0], max=[1.0]),
        task=Task.REGRESSION,
    )

    # Act
    predictions = predict_ensemble(ensemble, np.array([[0.2], [0.7]]))

    # Assert
    np.testing.assert_allclose(predictions, [[2.0], [2.0]])


def test_classification_averages_probabilities():
    """Test that (0.8, 0.2) and (0.4, 0.6) average to (0.6, 0.4) and predict class 0"""
    # Arrange
    ensemble = DjinnEnsemble(
        members=(
            constant_network(np.log([0.8, 0.2]), "classification"),
            constant_network(np.log([0.4, 0.6]), "classification"),
        ),
        member_seeds=(0, 1),
        scaler=ScalingParams(min=[0.0], max=[1.0]),
        task=Task.CLASSIFICATION,
        n_classes=2,
    )
    x = np.array([[0.5]])

    # Act / Assert
    np.testing.assert_allclose(predict_proba_ensemble(ensemble, x), [[0.6, 0.4]])
    np.testing.assert_array_equal(predict_ensemble(ensemble, x), [0])


def test_build_and_train_regression(regression_data, quick_training, shallow_trees):
    """Test member count, seeds, histories and prediction shape"""
    # Act
    ensemble = build_and_train(regression_data, 3, shallow_trees, quick_training, base_seed=4, track_scaled_cost=True)

    # Assert
    assert len(ensemble) == 3
    assert ensemble.member_seeds == (4, 5, 6)
    assert all(len(h) == quick_training.epochs for h in ensemble.histories)
    assert ensemble.histories[0].scaled_cost is not None
    predictions = ensemble.predict(regression_data.features)
    assert predictions.shape == (60, 1)
    assert np.all(np.isfinite(predictions))
    assert len(mean_cost_curves(ensemble)) == quick_training.epochs


def test_build_is_deterministic_across_job_counts(regression_data, quick_training, shallow_trees):
    """Test that serial and threaded builds give identical predictions"""
    serial = build_and_train(regression_data, 3, shallow_trees, quick_training, n_jobs=1)
    threaded = build_and_train(regression_data, 3, shallow_trees, quick_training, n_jobs=3)
    np.testing.assert_array_equal(serial.predict(regression_data.features), threaded.predict(regression_data.features))


@pytest.mark.parametrize("scheme", [InitScheme.RANDOM_DENSE, InitScheme.RANDOM_SPARSE])
def test_random_schemes_share_djinn_architectures(regression_data, quick_training, shallow_trees, scheme):
    """Test that baseline ensembles reuse the pruned DJINN architectures"""
    djinn = build_and_train(regression_data, 2, shallow_trees, quick_training)
    baseline = build_and_train(regression_data, 2, shallow_trees, quick_training, scheme=scheme)
    assert baseline.architectures == djinn.architectures
    assert baseline.scheme is scheme


def test_classification_ensemble_fits_separable_blobs(classification_data, shallow_trees):
    """Test that a classification ensemble predicts valid labels"""
    ensemble = build_and_train(classification_data, 2, shallow_trees, TrainingConfig(epochs=60, learning_rate=0.01, batch_size=10))
    labels = ensemble.predict(classification_data.features)
    assert set(np.unique(labels)) <= {0, 1, 2}
    assert np.mean(labels == classification_data.labels) > 0.8


def test_schema_round_trip_predicts_the_same(regression_data, quick_training, shallow_trees):
    """Test that a saved ensemble reloads with identical predictions"""
    ensemble = build_and_train(regression_data, 2, shallow_trees, quick_training)
    restored = DjinnEnsemble.from_schema(ensemble.to_schema())
    np.testing.assert_array_equal(restored.predict(regression_data.features), ensemble.predict(regression_data.features))


def test_sweep_normalizes_by_single_tree(regression_data, quick_training, shallow_trees):
    """Test that the one-tree row of the sweep is exactly 1"""
    # Arrange
    plan = make_splits(regression_data.n_samples, 2, 0.2, seed=0)

    # Act
    result = sweep_tree_count(regression_data, (1, 3), shallow_trees, quick_training, plan)

    # Assert
    np.testing.assert_array_equal(result.normalized[0], [1.0, 1.0])
    frame = result.to_frame()
    assert list(frame.columns) == ["n_trees", "mean", "std", "p0", "p1"]


def test_sweep_rejects_classification(classification_data, quick_training, shallow_trees):
    """Test that the sweep needs a regression dataset"""
    plan = make_splits(classification_data.n_samples, 1, 0.2, seed=0)
    with pytest.raises(ConfigurationError, match="regression"):
        sweep_tree_count(classification_data, (1, 2), shallow_trees, quick_training, plan)


def test_sweep_rejects_unsorted_counts(regression_data, quick_training, shallow_trees):
    """Test that tree counts must be ascending and distinct"""
    plan = make_splits(regression_data.n_samples, 1, 0.2, seed=0)
    with pytest.raises(ConfigurationError, match="ascending"):
        sweep_tree_count(regression_data, (3, 1), shallow_trees, quick_training, plan)


def test_target_scaler_maps_member_outputs_back():
    """Test that scaled member outputs are returned in target units"""
    # Arrange
    ensemble = DjinnEnsemble(
        members=(constant_network([0.25], "regression"), constant_network([0.75], "regression")),
        member_seeds=(0, 1),
        scaler=ScalingParams(min=[0.0], max=[1.0]),
        task=Task.REGRESSION,
        target_scaler=ScalingParams(min=[100.0], max=[300.0]),
    )

    # Act
    predictions = predict_ensemble(ensemble, np.array([[0.1], [0.9]]))

    # Assert
    np.testing.assert_allclose(predictions, [[200.0], [200.0]])
    assert DjinnEnsemble.from_schema(ensemble.to_schema()).target_scaler.to_dict() == {"min": [100.0], "max": [300.0]}


def test_regression_members_train_on_scaled_targets(regression_data, quick_training, shallow_trees):
    """Test that the target scaler spans the training targets and a constant offset passes straight through"""
    # Arrange
    shifted = regression_data.replace(targets=regression_data.targets + 1000.0)

    # Act
    base = build_and_train(regression_data, 2, shallow_trees, quick_training)
    offset = build_and_train(shifted, 2, shallow_trees, quick_training)

    # Assert
    assert offset.target_scaler.min[0] == pytest.approx(shifted.targets.min())
    assert offset.target_scaler.max[0] == pytest.approx(shifted.targets.max())
    np.testing.assert_allclose(
        offset.predict(regression_data.features),
        base.predict(regression_data.features) + 1000.0,
        atol=1e-6,
    )


def test_ensemble_error_never_exceeds_mean_member_error(regression_data, quick_training, shallow_trees):
    """Test that averaging members gives an MSE at most the mean member MSE"""
    # Arrange
    ensemble = build_and_train(regression_data, 4, shallow_trees, quick_training, base_seed=2)
    x, y = regression_data.features, regression_data.targets

    # Act
    ensemble_mse = regression_metrics(y, ensemble.predict(x))["mse"]
    member_mse = [
        regression_metrics(y, replace(ensemble, members=(net,), member_seeds=(seed,), histories=()).predict(x))["mse"]
        for net, seed in zip(ensemble.members, ensemble.member_seeds)
    ]

    # Assert
    assert ensemble_mse <= np.mean(member_mse) + 1e-12

"""
Tests for the Dataset container, min/max scaling and split plans
"""
import numpy as np
import pytest

from djinn.core.exceptions import DataError
from djinn.data.dataset import Dataset, Task
from djinn.data.scaling import apply_scaler, fit_scaler, invert_scaler
from djinn.data.splits import SplitPlan, check_fold_sizes, holdout_size, make_splits


def test_dataset_rejects_nan_features():
    """Test that NaN features are rejected at construction"""
    with pytest.raises(DataError, match="NaN"):
        Dataset(features=[[1.0], [np.nan]], targets=[1.0, 2.0], task=Task.REGRESSION)


def test_dataset_rejects_out_of_range_class():
    """Test that a class index >= n_classes is rejected"""
    with pytest.raises(DataError, match="class indices"):
        Dataset(features=[[0.0], [1.0]], targets=[0, 2], task=Task.CLASSIFICATION, n_classes=2)


def test_dataset_subset_keeps_metadata(classification_data):
    """Test that subsetting keeps names and class labels"""
    # Act
    part = classification_data.subset([0, 5, 59])

    # Assert
    assert part.n_samples == 3
    assert part.class_labels == classification_data.class_labels
    np.testing.assert_array_equal(part.labels, [0, 0, 2])


def test_scaler_maps_training_range_to_unit_interval():
    """Test that fitted columns land on [0, 1] and constant columns on 0"""
    # Arrange
    x = np.array([[1.0, 5.0, 2.0], [3.0, 5.0, 4.0], [2.0, 5.0, 8.0]])

    # Act
    params = fit_scaler(x)
    scaled = apply_scaler(x, params)

    # Assert
    np.testing.assert_allclose(scaled[:, 0], [0.0, 1.0, 0.5])
    np.testing.assert_array_equal(scaled[:, 1], 0.0)
    np.testing.assert_allclose(invert_scaler(scaled, params)[:, [0, 2]], x[:, [0, 2]])


def test_scaler_does_not_clip_outside_range():
    """Test that values beyond the training range scale past [0, 1]"""
    params = fit_scaler(np.array([[0.0], [10.0]]))
    np.testing.assert_allclose(apply_scaler(np.array([[20.0], [-5.0]]), params), [[2.0], [-0.5]])


def test_scaler_rejects_wrong_width():
    """Test that applying a scaler to the wrong number of features raises"""
    params = fit_scaler(np.zeros((3, 2)))
    with pytest.raises(DataError, match="2 features"):
        apply_scaler(np.zeros((3, 3)), params)


@pytest.mark.parametrize(
    "n, fraction, expected",
    [(10, 0.2, 2), (5, 0.5, 3), (3, 0.01, 1), (3, 0.99, 2), (150, 0.2, 30)],
)
def test_holdout_size_rounds_half_up_and_clamps(n, fraction, expected):
    """Test the test-set size rule"""
    assert holdout_size(n, fraction) == expected


def test_make_splits_partitions_rows():
    """Test that each permutation is a disjoint cover of all rows"""
    # Act
    plan = make_splits(n_samples=50, n_permutations=4, test_fraction=0.2, seed=11)

    # Assert
    assert len(plan) == 4
    for train, test in plan.permutations:
        assert test.size == 10
        assert np.intersect1d(train, test).size == 0
        np.testing.assert_array_equal(np.sort(np.concatenate([train, test])), np.arange(50))


def test_make_splits_is_deterministic_and_serializable():
    """Test that equal seeds give equal plans that survive to_dict/from_dict"""
    # Arrange
    first = make_splits(30, 3, 0.2, seed=5)
    second = make_splits(30, 3, 0.2, seed=5)

    # Act
    restored = SplitPlan.from_dict(first.to_dict())

    # Assert
    assert first.to_dict() == second.to_dict()
    assert restored.to_dict() == first.to_dict()
    assert first.to_dict() != make_splits(30, 3, 0.2, seed=6).to_dict()


@pytest.mark.parametrize("kwargs", [{"n_samples": 1}, {"test_fraction": 1.0}, {"n_permutations": 0}])
def test_make_splits_rejects_bad_arguments(kwargs):
    """Test that invalid split arguments raise DataError"""
    args = {"n_samples": 10, "n_permutations": 2, "test_fraction": 0.2, "seed": 0, **kwargs}
    with pytest.raises(DataError):
        make_splits(**args)


def test_two_sample_split_keeps_one_test_row():
    """Test that the minimum-size rule still gives a single test row"""
    plan = make_splits(2, 1, 0.2, seed=0)
    train, test = plan.permutations[0]
    assert (train.size, test.size) == (1, 1)


@pytest.mark.parametrize("n_samples, fraction", [(2, 0.2), (3, 0.2), (5, 0.9)])
def test_fold_size_check_rejects_single_row_folds(n_samples, fraction):
    """Test that a plan whose folds cannot become datasets fails with a clear message"""
    # Arrange
    plan = make_splits(n_samples, 2, fraction, seed=0)

    # Act / Assert
    with pytest.raises(DataError, match="at least 2 rows"):
        check_fold_sizes(plan)


def test_fold_size_check_accepts_small_valid_plans():
    """Test that four rows at a half split pass the check"""
    check_fold_sizes(make_splits(4, 3, 0.5, seed=0))

"""
Tests for the synthetic surface and logic-gate tables
"""
import numpy as np
import pytest

from djinn.core.exceptions import DataError
from djinn.data.synthetic import LOGIC_GATES, cliff_peak_response, logic_gate, make_cliff_peak


def test_cliff_peak_is_seeded_and_positive():
    """Test that the surface sample is reproducible and strictly positive"""
    # Act
    first = make_cliff_peak(200, n_features=4, seed=1)
    second = make_cliff_peak(200, n_features=4, seed=1)

    # Assert
    np.testing.assert_array_equal(first.features, second.features)
    assert first.targets.min() > 0
    assert first.features.min() >= 0 and first.features.max() <= 1


def test_cliff_is_steep_across_the_projection():
    """Test that the response jumps across the oblique cliff"""
    low = cliff_peak_response(np.full((1, 3), 0.05))
    high = cliff_peak_response(np.full((1, 3), 0.95))
    assert high[0] - low[0] > 3.0


@pytest.mark.parametrize("gate, expected", [("or", [0, 1, 1, 1]), ("xor", [0, 1, 1, 0]), ("if", [0, 1])])
def test_logic_gate_truth_tables(gate, expected):
    """Test the truth table of each gate"""
    dataset = logic_gate(gate)
    assert gate in LOGIC_GATES
    np.testing.assert_array_equal(dataset.labels, expected)
    assert dataset.n_classes == 2


def test_unknown_gate_raises():
    """Test that an unknown gate name raises DataError"""
    with pytest.raises(DataError, match="unknown logic gate"):
        logic_gate("nand")

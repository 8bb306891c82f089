"""
Tests for the dense and sparse random initializations
"""
import numpy as np
import pytest

from djinn.baselines.init import SparsityBudget, random_dense_init, random_sparse_init, sparse_mask
from djinn.core.exceptions import BudgetError
from djinn.mapping.architecture import Architecture
from djinn.mapping.initializer import map_tree
from djinn.mapping.stats import init_stats
from djinn.tree.topology import analyze_topology


def test_dense_init_fills_every_weight():
    """Test that the dense scheme has no zero weights and no unity marks"""
    # Arrange
    arch = Architecture(n_in=3, hidden_widths=(4, 6), n_out=2)

    # Act
    net = random_dense_init(arch, rng_seed=0)

    # Assert
    assert all(np.count_nonzero(w) == w.size for w in net.weights)
    assert not any(u.any() for u in net.unity)


def test_sparse_mask_covers_rows_and_columns():
    """Test exact counts and full row/column coverage over many shapes"""
    rng = np.random.default_rng(0)
    for _ in range(200):
        rows, cols = rng.integers(1, 12, size=2)
        count = int(rng.integers(max(rows, cols), rows * cols + 1))
        mask = sparse_mask(int(rows), int(cols), count, rng)
        assert mask.sum() == count
        assert mask.any(axis=1).all()
        assert mask.any(axis=0).all()


def test_sparse_init_matches_budget():
    """Test that every layer holds exactly the budgeted nonzero count"""
    # Arrange
    arch = Architecture(n_in=3, hidden_widths=(4, 6), n_out=2)
    budget = SparsityBudget(counts=(5, 9, 6))

    # Act
    net = random_sparse_init(arch, budget, rng_seed=1)

    # Assert
    assert init_stats(net).nonzero == (5, 9, 6)


def test_budget_from_mapped_network_raises_to_cover_floor(three_level_tree):
    """Test that a mapped network's counts are copied and raised where needed"""
    # Arrange
    mapped = map_tree(three_level_tree, analyze_topology(three_level_tree), 3, 2, rng_seed=0)

    # Act
    budget = SparsityBudget.from_init_stats(init_stats(mapped), mapped.architecture)

    # Assert
    assert budget.counts == (4, 6, 6)


@pytest.mark.parametrize("counts", [(3, 9, 6), (12, 25, 6), (5, 9)])
def test_infeasible_budget_raises(counts):
    """Test that budgets below the cover floor, above the layer size or of the wrong length fail"""
    arch = Architecture(n_in=3, hidden_widths=(4, 6), n_out=2)
    with pytest.raises(BudgetError):
        random_sparse_init(arch, SparsityBudget(counts=counts), rng_seed=0)


def test_sparse_init_is_deterministic():
    """Test that equal seeds give identical sparse networks"""
    arch = Architecture(n_in=2, hidden_widths=(3,), n_out=1)
    budget = SparsityBudget(counts=(4, 3))
    a = random_sparse_init(arch, budget, rng_seed=7)
    b = random_sparse_init(arch, budget, rng_seed=7)
    for wa, wb in zip(a.weights, b.weights):
        np.testing.assert_array_equal(wa, wb)


def test_dense_weights_have_xavier_variance():
    """Test that 1e5 dense weights have variance 3 / (n_prev + n_cur) within 5%"""
    # Arrange
    arch = Architecture(n_in=400, hidden_widths=(250,), n_out=3)

    # Act
    net = random_dense_init(arch, rng_seed=11)

    # Assert
    w = net.weights[0]
    assert w.size == 100_000
    assert np.var(w) == pytest.approx(3.0 / (400 + 250), rel=0.05)
    assert np.mean(w) == pytest.approx(0.0, abs=0.01)

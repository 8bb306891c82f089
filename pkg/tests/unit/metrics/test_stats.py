"""
Tests for the pooled-variance t-test and report aggregation
"""
import numpy as np
import pytest
from scipy import stats

from djinn.core.exceptions import MetricError
from djinn.data.dataset import Task
from djinn.metrics.report import attach_pvalues, build_report, format_table, summarize
from djinn.metrics.stats import ttest_pvalue


def test_ttest_reference_case():
    """Test (1..5) against (2..6), where t = 1 with 8 degrees of freedom"""
    assert ttest_pvalue([1, 2, 3, 4, 5], [2, 3, 4, 5, 6]) == pytest.approx(0.3466, abs=1e-4)


def test_ttest_identical_samples():
    """Test that identical samples give p = 1"""
    assert ttest_pvalue([0.1, 0.2, 0.3], [0.1, 0.2, 0.3]) == pytest.approx(1.0)


def test_ttest_zero_variance_edge_cases():
    """Test equal constants (p = 1) and different constants (machine minimum)"""
    assert ttest_pvalue([2.0, 2.0], [2.0, 2.0]) == 1.0
    assert ttest_pvalue([2.0, 2.0], [3.0, 3.0]) == np.finfo(np.float64).tiny


def test_ttest_is_symmetric():
    """Test that swapping the samples gives the same p"""
    a, b = [0.3, 0.5, 0.4, 0.9], [0.1, 0.2, 0.25]
    assert ttest_pvalue(a, b) == pytest.approx(ttest_pvalue(b, a))


def test_ttest_matches_scipy_on_random_cases():
    """Test agreement with scipy's Student t-test on 50 random cases"""
    rng = np.random.default_rng(12)
    for _ in range(50):
        a = rng.normal(rng.uniform(-1, 1), rng.uniform(0.1, 2), size=rng.integers(2, 12))
        b = rng.normal(rng.uniform(-1, 1), rng.uniform(0.1, 2), size=rng.integers(2, 12))
        expected = stats.ttest_ind(a, b, equal_var=True).pvalue
        assert ttest_pvalue(a, b) == pytest.approx(expected, abs=1e-6)


def test_ttest_needs_two_scores():
    """Test that a single score per sample is rejected"""
    with pytest.raises(MetricError):
        ttest_pvalue([1.0], [1.0, 2.0])


def test_summarize_uses_population_std():
    """Test mean and ddof=0 standard deviation"""
    summary = summarize([{"mse": 1.0}, {"mse": 3.0}])
    assert summary["mse"].mean == 2.0
    assert summary["mse"].std == 1.0
    assert summary["mse"].scores == [1.0, 3.0]


def test_attach_pvalues_against_reference():
    """Test that p-values are attached per shared metric without changing the input"""
    # Arrange
    runs_a = [{"mse": v, "mae": v, "ev": 0.9} for v in (1, 2, 3, 4, 5)]
    runs_b = [{"mse": v, "mae": v, "ev": 0.9} for v in (2, 3, 4, 5, 6)]
    a = build_report("djinn", Task.REGRESSION, runs_a)
    b = build_report("random_dense", Task.REGRESSION, runs_b)

    # Act
    b_with_p = attach_pvalues(b, a)

    # Assert
    assert b_with_p.reference == "djinn"
    assert b_with_p.p_values["mse"] == pytest.approx(0.3466, abs=1e-4)
    assert b_with_p.p_values["ev"] == 1.0
    assert b.p_values == {}


def test_format_table_lists_every_model():
    """Test the plain-text comparison table"""
    # Arrange
    runs = [{"recall": 1.0, "precision": 1.0, "accuracy": a} for a in (0.9, 1.0)]
    report = build_report("djinn", Task.CLASSIFICATION, runs)

    # Act
    table = format_table([attach_pvalues(report, report)], reference="djinn")

    # Assert
    assert "djinn" in table
    assert "0.950 ± 0.050" in table
    assert "p (ACCURACY)" in table

"""
Aggregation of per-permutation scores into reports, and the plain-text
comparison table.
"""
from __future__ import annotations

from typing import Mapping, Optional, Sequence

import numpy as np
import pandas as pd

from djinn.core.exceptions import MetricError
from djinn.data.dataset import Task
from djinn.metrics.scores import CLASSIFICATION_METRICS, REGRESSION_METRICS
from djinn.metrics.stats import ttest_pvalue
from djinn.schemas.report import EvalReport, MetricSummary


def metric_names(task: Task) -> tuple[str, ...]:
    return REGRESSION_METRICS if Task(task) is Task.REGRESSION else CLASSIFICATION_METRICS


def pvalue_metric(task: Task) -> str:
    """Regression compares test MSE values, classification test accuracy."""
    return "mse" if Task(task) is Task.REGRESSION else "accuracy"


def summarize(per_permutation: Sequence[Mapping[str, float]]) -> dict[str, MetricSummary]:
    """Mean and population standard deviation of each metric."""
    if not per_permutation:
        raise MetricError("no permutation scores to summarize")
    summary = {}
    for name in per_permutation[0]:
        scores = [float(scores[name]) for scores in per_permutation]
        summary[name] = MetricSummary(
            mean=float(np.mean(scores)), std=float(np.std(scores)), scores=scores
        )
    return summary


def build_report(
    model: str,
    task: Task,
    per_permutation: Sequence[Mapping[str, float]],
    architectures: Sequence[Sequence[Sequence[int]]] = (),
) -> EvalReport:
    return EvalReport(
        model=model,
        task=task,
        metrics=summarize(per_permutation),
        architectures=[[list(map(int, widths)) for widths in fold] for fold in architectures],
    )


def attach_pvalues(report: EvalReport, reference: EvalReport) -> EvalReport:
    """Copy of `report` with p-values of every shared metric against `reference`."""
    if report.n_permutations != reference.n_permutations:
        raise MetricError(
            f"{report.model} has {report.n_permutations} permutations, "
            f"{reference.model} has {reference.n_permutations}"
        )
    p_values = {
        name: ttest_pvalue(summary.scores, reference.scores(name))
        for name, summary in report.metrics.items()
        if name in reference.metrics
    }
    return report.model_copy(update={"p_values": p_values, "reference": reference.model})


def format_table(reports: Sequence[EvalReport], reference: Optional[str] = None) -> str:
    """
    One row per model, "mean ± std" per metric, plus the p-value column of
    the task's comparison metric.
    """
    if not reports:
        return ""
    task = reports[0].task
    names = metric_names(task)
    p_name = pvalue_metric(task)
    rows = []
    for report in reports:
        row = {"model": report.model}
        for name in names:
            summary = report.metrics[name]
            row[name.upper()] = f"{summary.mean:.3f} ± {summary.std:.3f}"
        p = report.p_values.get(p_name)
        row[f"p ({p_name.upper()})"] = "-" if p is None or report.model == reference else f"{p:.3g}"
        rows.append(row)
    return pd.DataFrame(rows).to_string(index=False)

from .report import attach_pvalues, build_report, format_table, metric_names, pvalue_metric, summarize
from .scores import classification_metrics, regression_metrics
from .stats import ttest_pvalue

__all__ = [
    "attach_pvalues",
    "build_report",
    "format_table",
    "metric_names",
    "pvalue_metric",
    "summarize",
    "classification_metrics",
    "regression_metrics",
    "ttest_pvalue",
]

from __future__ import annotations

import numpy as np
from numpy.typing import ArrayLike
from scipy import special

from djinn.core.exceptions import MetricError


def ttest_pvalue(scores_a: ArrayLike, scores_b: ArrayLike) -> float:
    """
    Two-sided pooled-variance Student t-test. The tail probability comes from
    the regularized incomplete beta: p = I_{df/(df+t^2)}(df/2, 1/2).
    """
    a = np.asarray(scores_a, dtype=np.float64).ravel()
    b = np.asarray(scores_b, dtype=np.float64).ravel()
    if a.size < 2 or b.size < 2:
        raise MetricError(f"each sample needs >= 2 scores, got {a.size} and {b.size}")
    if not (np.all(np.isfinite(a)) and np.all(np.isfinite(b))):
        raise MetricError("scores contain NaN or Inf")

    df = a.size + b.size - 2
    diff = a.mean() - b.mean()
    pooled = ((a.size - 1) * a.var(ddof=1) + (b.size - 1) * b.var(ddof=1)) / df
    if pooled == 0.0:
        return 1.0 if diff == 0.0 else float(np.finfo(np.float64).tiny)
    t = diff / np.sqrt(pooled * (1.0 / a.size + 1.0 / b.size))
    p = float(special.betainc(df / 2.0, 0.5, df / (df + t * t)))
    return min(max(p, float(np.finfo(np.float64).tiny)), 1.0)

from .bayesopt_service import SearchedModel, compare_bayesopt
from .ensemble_service import (
    DjinnEnsemble,
    SweepResult,
    build_and_train,
    predict_ensemble,
    predict_proba_ensemble,
    sweep_tree_count,
)
from .evaluation_service import compare_schemes, crossval_evaluate, crossval_run, ensemble_builder

__all__ = [
    "SearchedModel",
    "compare_bayesopt",
    "DjinnEnsemble",
    "SweepResult",
    "build_and_train",
    "predict_ensemble",
    "predict_proba_ensemble",
    "sweep_tree_count",
    "compare_schemes",
    "crossval_evaluate",
    "crossval_run",
    "ensemble_builder",
]

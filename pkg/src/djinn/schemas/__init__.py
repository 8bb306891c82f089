from .config import InitScheme, RunConfig, SearchConfig, TrainingConfig, TreeConfig
from .model import EnsembleSchema, InitializedNetworkSchema, NetworkSchema, ScalerSchema
from .report import EvalReport, MetricSummary
from .split import SplitPlanSchema
from .tree import TreeNodeSchema, TreeSchema
from .trial import TrialSchema

__all__ = [
    "InitScheme",
    "RunConfig",
    "SearchConfig",
    "TrainingConfig",
    "TreeConfig",
    "EnsembleSchema",
    "InitializedNetworkSchema",
    "ScalerSchema",
    "NetworkSchema",
    "EvalReport",
    "MetricSummary",
    "SplitPlanSchema",
    "TreeNodeSchema",
    "TreeSchema",
    "TrialSchema",
]

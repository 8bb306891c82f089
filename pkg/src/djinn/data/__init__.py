from .dataset import Dataset, Task
from .loader import load_csv
from .scaling import ScalingParams, apply_scaler, fit_scaler, invert_scaler
from .splits import SplitPlan, make_splits

__all__ = [
    'Dataset',
    'Task',
    'load_csv',
    'ScalingParams',
    'fit_scaler',
    'apply_scaler',
    'invert_scaler',
    'SplitPlan',
    'make_splits',
]

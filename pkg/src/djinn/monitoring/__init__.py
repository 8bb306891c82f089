from .training import track_training, track_tree_fit
from .exporter import export_metrics

__all__ = [
    'track_training',
    'track_tree_fit',
    'export_metrics'
]

from .cart import DecisionTree, NodeKind, TreeNode, fit_tree, predict_tree, resolve_max_features
from .forest import Forest, fit_forest
from .topology import TreeTopology, analyze_topology

__all__ = [
    "DecisionTree",
    "NodeKind",
    "TreeNode",
    "fit_tree",
    "predict_tree",
    "resolve_max_features",
    "Forest",
    "fit_forest",
    "TreeTopology",
    "analyze_topology",
]

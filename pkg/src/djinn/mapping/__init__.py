from .architecture import Architecture, architecture_from_topology, xavier_sigma
from .initializer import InitializedNetwork, NeuronRole, map_tree
from .pruning import prune_dead_neurons
from .stats import InitStats, init_stats

__all__ = [
    "Architecture",
    "architecture_from_topology",
    "xavier_sigma",
    "InitializedNetwork",
    "NeuronRole",
    "map_tree",
    "prune_dead_neurons",
    "InitStats",
    "init_stats",
]

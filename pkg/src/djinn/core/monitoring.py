from prometheus_client import CollectorRegistry, Counter, Histogram, Info

# Dedicated registry so exports only carry pipeline metrics
REGISTRY = CollectorRegistry()

# Training metrics
NETWORKS_TRAINED = Counter(
    'djinn_networks_trained_total',
    'Total count of trained networks',
    ['scheme'],
    registry=REGISTRY,
)

TRAINING_DURATION = Histogram(
    'djinn_training_duration_seconds',
    'Wall-clock time spent training one network',
    ['scheme'],
    buckets=(0.1, 0.5, 1, 2.5, 5, 10, 30, 60, 120, 300, 600),
    registry=REGISTRY,
)

# Tree metrics
TREES_FITTED = Counter(
    'djinn_trees_fitted_total',
    'Total count of fitted decision trees',
    ['task'],
    registry=REGISTRY,
)

NEURONS_PRUNED = Counter(
    'djinn_neurons_pruned_total',
    'Hidden neurons removed from mapped networks',
    registry=REGISTRY,
)

# Architecture search metrics
BAYESOPT_TRIALS = Counter(
    'djinn_bayesopt_trials_total',
    'Architectures evaluated by the Bayesian search',
    registry=REGISTRY,
)

BAYESOPT_FALLBACKS = Counter(
    'djinn_bayesopt_fallbacks_total',
    'Search iterations that fell back to random proposals',
    registry=REGISTRY,
)

# Run info
RUN_INFO = Info('djinn_run', 'Run information', registry=REGISTRY)

from .losses import LossKind, softmax
from .network import Network, forward, loss_and_gradient, predict

__all__ = [
    "LossKind",
    "softmax",
    "Network",
    "forward",
    "loss_and_gradient",
    "predict",
]

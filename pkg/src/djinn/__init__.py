"""
Deep jointly-informed neural networks.

Decision-tree ensembles are mapped to initialized deep feed-forward networks,
which are then fine-tuned by back-propagation.
"""
__version__ = "0.1.0"

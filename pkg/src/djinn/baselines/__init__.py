from .init import SparsityBudget, random_dense_init, random_sparse_init

__all__ = ["SparsityBudget", "random_dense_init", "random_sparse_init"]

from . import bayesopt, compare, export_dot, logic_demo, make_synthetic, predict, sweep_trees, train

COMMANDS = (train, predict, compare, sweep_trees, bayesopt, logic_demo, export_dot, make_synthetic)

__all__ = ["COMMANDS"]

"""
Tree serialization: nested JSON node objects and Graphviz DOT text.
"""
import numpy as np
from graphviz import Digraph

from djinn.data.dataset import Task
from djinn.schemas.tree import TreeNodeSchema, TreeSchema
from djinn.tree.cart import DecisionTree, NodeKind, TreeNode


def _node_to_schema(node: TreeNode) -> TreeNodeSchema:
    return TreeNodeSchema(
        kind=node.kind.value,
        level=node.level,
        feature_index=node.feature_index,
        threshold=node.threshold,
        left=None if node.left is None else _node_to_schema(node.left),
        right=None if node.right is None else _node_to_schema(node.right),
        value=node.value.tolist(),
        label=node.label,
        n_samples=node.n_samples,
    )


def _node_from_schema(node: TreeNodeSchema) -> TreeNode:
    if NodeKind(node.kind) is NodeKind.LEAF:
        return TreeNode.leaf(node.level, np.asarray(node.value), node.label, node.n_samples)
    return TreeNode.branch(
        node.level,
        node.feature_index,
        node.threshold,
        _node_from_schema(node.left),
        _node_from_schema(node.right),
        node.n_samples,
    )


def tree_to_schema(tree: DecisionTree) -> TreeSchema:
    return TreeSchema(
        root=_node_to_schema(tree.root),
        max_depth=tree.max_depth,
        n_features=tree.n_features,
        task=tree.task,
        n_outputs=tree.n_outputs,
    )


def tree_from_schema(schema: TreeSchema) -> DecisionTree:
    return DecisionTree(
        root=_node_from_schema(schema.root),
        max_depth=schema.max_depth,
        n_features=schema.n_features,
        task=schema.task,
        n_outputs=schema.n_outputs,
    )


def _leaf_label(tree: DecisionTree, node: TreeNode) -> str:
    if tree.task is Task.CLASSIFICATION:
        return f"class {node.label}"
    return ", ".join(f"{v:.4g}" for v in node.value)


def tree_to_dot(tree: DecisionTree, name: str = "tree") -> str:
    """Branches read "x{i} ≤ t"; the left edge is the ≤ side."""
    graph = Digraph(name=name)
    graph.attr("node", fontname="Helvetica")
    ids: dict[int, str] = {}
    for number, node in enumerate(tree.nodes()):
        ids[id(node)] = f"n{number}"
        if node.is_leaf:
            graph.node(ids[id(node)], _leaf_label(tree, node), shape="box")
        else:
            graph.node(
                ids[id(node)], f"x{node.feature_index} ≤ {node.threshold:.4g}", shape="ellipse"
            )
    for node in tree.nodes():
        if node.is_leaf:
            continue
        left, right = node.children()
        graph.edge(ids[id(node)], ids[id(left)], label="yes")
        graph.edge(ids[id(node)], ids[id(right)], label="no", style="dashed")
    return graph.source

"""
Tests for tree JSON schemas and DOT rendering
"""
import numpy as np

from djinn.tree.cart import predict_tree
from djinn.tree.export import tree_from_schema, tree_to_dot, tree_to_schema


def test_schema_round_trip_predicts_the_same(three_level_tree):
    """Test that a tree rebuilt from its JSON schema routes rows identically"""
    # Arrange
    rows = np.random.default_rng(0).uniform(size=(20, 3))

    # Act
    payload = tree_to_schema(three_level_tree).model_dump_json()
    restored = tree_from_schema(type(tree_to_schema(three_level_tree)).model_validate_json(payload))

    # Assert
    np.testing.assert_array_equal(predict_tree(restored, rows), predict_tree(three_level_tree, rows))


def test_dot_has_one_edge_per_child(three_level_tree):
    """Test that the DOT text labels branches and draws every parent-child edge"""
    dot = tree_to_dot(three_level_tree)
    assert "x0 ≤ 0.5" in dot
    assert dot.count("->") == 8
    assert "class 1" in dot

"""
`djinn export-dot`: Graphviz DOT of a saved network, ensemble member, mapped
(untrained) network or decision tree. Only mapped networks carry unity styling.
"""
import argparse
from pathlib import Path

import numpy as np

from djinn.core.config import Settings
from djinn.core.exceptions import ConfigurationError
from djinn.mapping.export import network_to_dot
from djinn.repositories.artifact_repository import ArtifactRepository, load_model
from djinn.schemas.model import EnsembleSchema, InitializedNetworkSchema
from djinn.schemas.tree import TreeSchema
from djinn.tree.export import tree_from_schema, tree_to_dot

NAME = "export-dot"


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(NAME, help="write a model JSON as Graphviz DOT")
    parser.add_argument("model", help="network, ensemble, mapped-network or tree JSON")
    parser.add_argument("--member", type=int, default=0, help="ensemble member to draw")
    parser.add_argument("--out", help="DOT file to write (default: print to stdout)")
    parser.set_defaults(handler=run)


def model_to_dot(path: str, member: int = 0) -> str:
    model = load_model(path)
    if isinstance(model, TreeSchema):
        return tree_to_dot(tree_from_schema(model), name=Path(path).stem)
    if isinstance(model, EnsembleSchema):
        if not 0 <= member < len(model.members):
            raise ConfigurationError(
                f"--member {member} out of range for an ensemble of {len(model.members)}"
            )
        model = model.members[member]
    weights = [
        np.asarray(w, dtype=np.float64).reshape(rows, cols)
        for w, rows, cols in zip(model.weights, model.widths[1:], model.widths[:-1])
    ]
    unity = None
    if isinstance(model, InitializedNetworkSchema):
        unity = [np.zeros(w.shape, dtype=bool) for w in weights]
        for mask, entries in zip(unity, model.unity):
            for row, col in entries:
                mask[row, col] = True
    return network_to_dot(weights, unity, name=Path(path).stem)


def run(args: argparse.Namespace, settings: Settings) -> ArtifactRepository:
    dot = model_to_dot(args.model, args.member)
    if args.out is None:
        print(dot)
        return ArtifactRepository(settings.OUTPUT_DIR)
    out = Path(args.out)
    repo = ArtifactRepository(out.parent)
    repo.stage_text(out.name, dot)
    return repo

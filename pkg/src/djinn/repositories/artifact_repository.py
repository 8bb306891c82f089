"""
Run artifacts on disk. Writes are staged in memory and flushed together by
commit(), so a failed command leaves no partial outputs behind.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Union

import pandas as pd
from loguru import logger
from pydantic import BaseModel, ValidationError

from djinn.core.exceptions import DataError
from djinn.schemas.model import EnsembleSchema, InitializedNetworkSchema, NetworkSchema
from djinn.schemas.tree import TreeSchema

ModelSchema = Union[NetworkSchema, EnsembleSchema, InitializedNetworkSchema, TreeSchema]


def dumps_json(payload: Union[BaseModel, dict, list]) -> str:
    """Sorted keys and two-space indent, so reruns are byte-identical."""
    if isinstance(payload, BaseModel):
        payload = payload.model_dump(mode="json")
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


class ArtifactRepository:
    def __init__(self, root: Union[str, Path]) -> None:
        self.root = Path(root)
        self._staged: dict[str, str] = {}

    @property
    def staged(self) -> list[str]:
        return sorted(self._staged)

    def stage_text(self, name: str, text: str) -> None:
        self._staged[name] = text

    def stage_json(self, name: str, payload: Union[BaseModel, dict, list]) -> None:
        self.stage_text(name, dumps_json(payload))

    def stage_csv(self, name: str, frame: pd.DataFrame) -> None:
        self.stage_text(name, frame.to_csv(index=False, float_format="%.10g", lineterminator="\n"))

    def commit(self) -> list[Path]:
        if not self._staged:
            return []
        self.root.mkdir(parents=True, exist_ok=True)
        written = []
        for name in self.staged:
            path = self.root / name
            path.write_text(self._staged[name], encoding="utf-8")
            written.append(path)
        self._staged.clear()
        logger.info(f"Wrote {len(written)} artifacts to {self.root}")
        return written


def _read_json(path: Union[str, Path]) -> Any:
    path = Path(path)
    if not path.is_file():
        raise DataError(f"model file not found: {path}")
    try:
        return json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise DataError(f"{path} is not valid JSON: {exc}") from exc


def load_model(path: Union[str, Path]) -> ModelSchema:
    """Detect the artifact kind from its keys and validate it."""
    payload = _read_json(path)
    if not isinstance(payload, dict):
        raise DataError(f"{path} does not hold a model object")
    if "members" in payload:
        schema: type[BaseModel] = EnsembleSchema
    elif "root" in payload:
        schema = TreeSchema
    elif "unity" in payload:
        schema = InitializedNetworkSchema
    else:
        schema = NetworkSchema
    try:
        return schema.model_validate(payload)  # type: ignore[return-value]
    except ValidationError as exc:
        raise DataError(f"{path} is not a valid {schema.__name__}: {exc}") from exc


def load_ensemble(path: Union[str, Path]) -> EnsembleSchema:
    model = load_model(path)
    if not isinstance(model, EnsembleSchema):
        raise DataError(f"{path} holds a {type(model).__name__}, not an ensemble")
    return model

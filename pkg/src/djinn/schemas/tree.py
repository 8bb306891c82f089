from typing import Optional

from pydantic import BaseModel

from djinn.data.dataset import Task


class TreeNodeSchema(BaseModel):
    kind: str
    level: int
    feature_index: Optional[int] = None
    threshold: Optional[float] = None
    left: Optional["TreeNodeSchema"] = None
    right: Optional["TreeNodeSchema"] = None
    value: list[float] = []
    label: Optional[int] = None
    n_samples: int = 0


class TreeSchema(BaseModel):
    root: TreeNodeSchema
    max_depth: int
    n_features: int
    task: Task
    n_outputs: int


TreeNodeSchema.model_rebuild()

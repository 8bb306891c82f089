from pydantic import BaseModel, Field


class PermutationSchema(BaseModel):
    train: list[int]
    test: list[int]


class SplitPlanSchema(BaseModel):
    seed: int
    test_fraction: float = Field(gt=0, lt=1)
    permutations: list[PermutationSchema]

from pydantic import BaseModel


class TrialSchema(BaseModel):
    iteration: int
    widths: list[int]
    objective: float
    seed: int

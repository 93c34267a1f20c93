from datetime import datetime
from typing import List, Literal, Optional

from pydantic import BaseModel, Field

from .models import RunStats

Algorithm = Literal["moeller", "sigmoeller"]


class ProblemIn(BaseModel):
    ring: str = "int"                         # int | rat | unipoly(t) | multipoly(t,u)
    variables: List[str] = Field(min_length=1)
    order: Literal["lex", "grevlex"] = "grevlex"
    generators: List[str] = Field(min_length=1)


class RunOptions(BaseModel):
    algorithm: Algorithm = "sigmoeller"
    criteria: str = "all"                     # all | none | comma list of syzygy,f5,singular
    verify: bool = False
    trace: bool = False


class SolveIn(ProblemIn, RunOptions):
    pass


class BasisEntry(BaseModel):
    polynomial: str
    leading_term: str
    signature: Optional[str] = None


class StatsReport(BaseModel):
    run_id: str
    problem: str
    algorithm: Algorithm
    criteria: List[str]
    stats: RunStats
    queue_pops: int = 0
    wall_time_ms: float
    generated_at: datetime
    basis: List[BasisEntry]
    verified: Optional[bool] = None
    trace: List[str] = Field(default_factory=list)

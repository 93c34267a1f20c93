from pydantic import BaseModel, Field


class RunStats(BaseModel):
    """Counters of one algorithm run. Field names are the JSON report schema."""

    saturated_sets_considered: int = Field(default=0, ge=0)
    s_polynomials_reduced: int = Field(default=0, ge=0)
    reductions_to_zero: int = Field(default=0, ge=0)
    discarded_f5: int = Field(default=0, ge=0)
    discarded_singular: int = Field(default=0, ge=0)
    discarded_syzygy: int = Field(default=0, ge=0)
    discarded_1singular: int = Field(default=0, ge=0)
    basis_size: int = Field(default=0, ge=0)

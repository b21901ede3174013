from typing import Any, Optional

from pydantic import BaseModel, Field, field_validator


class BatchRow(BaseModel):
    """Pydantic model for one (entry, family) result of a batch"""

    name: str
    family: str
    polynomial: Optional[str] = None
    writhe: Optional[int] = None
    crossings: Optional[int] = None
    n_o_bound: Optional[int] = None
    n_real_bound: Optional[int] = None
    n_v_bound: Optional[int] = None
    z_span: Optional[int] = None
    nonclassical: Optional[bool] = None
    odd_evidence: Optional[bool] = None
    base_point_dependent: Optional[bool] = None
    error: Optional[str] = None

    @field_validator("*", mode="before")
    def empty_str_to_none(cls: Any, v: Any) -> Optional[Any]:
        # CSV round trips write missing values as empty strings or NaN
        if v == "" or (isinstance(v, float) and v != v):
            return None
        return v

    @property
    def is_zero(self) -> bool:
        return self.polynomial == "0"


class ConjectureViolation(BaseModel):
    """Pydantic model for an entry whose z-span exceeds its real crossing count"""

    name: str
    family: str
    z_span: int
    crossings: int


class Detection(BaseModel):
    """Pydantic model for entries zero under one family and nonzero under another"""

    zero_in: str
    nonzero_in: str
    count: int


class BatchSummary(BaseModel):
    """Pydantic model for the aggregate counts of a batch, recomputed from its rows"""

    entries: int = 0
    zero: dict[str, int] = Field(default_factory=dict)
    nonzero: dict[str, int] = Field(default_factory=dict)
    errors: dict[str, int] = Field(default_factory=dict)
    detections: list[Detection] = Field(default_factory=list)

    def detection(self, zero_in: str, nonzero_in: str) -> int:
        for d in self.detections:
            if d.zero_in == zero_in and d.nonzero_in == nonzero_in:
                return d.count
        return 0


class BatchReport(BaseModel):
    """Pydantic model for a whole batch run"""

    entries: list[BatchRow] = Field(default_factory=list)
    summary: BatchSummary = Field(default_factory=BatchSummary)
    conjecture_violations: list[ConjectureViolation] = Field(default_factory=list)

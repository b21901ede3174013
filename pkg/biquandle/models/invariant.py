from typing import Optional

from pydantic import BaseModel, Field


class VariableExponents(BaseModel):
    """Pydantic model for the highest and lowest exponent of one bounded variable"""

    e_max: Optional[int] = None  # None for the zero polynomial
    e_min: Optional[int] = None

    @property
    def e(self) -> int:
        if self.e_max is None or self.e_min is None:
            return 0
        return max(abs(self.e_max), abs(self.e_min))

    @property
    def span(self) -> int:
        if self.e_max is None or self.e_min is None:
            return 0
        return self.e_max - self.e_min


class Flags(BaseModel):
    """Pydantic model for the yes/no conclusions drawn from one invariant"""

    nonclassical: Optional[bool] = None
    has_odd_crossing_evidence: Optional[bool] = None
    base_point_dependent: bool = False  # virtual map values follow the pass order of the code


class BoundsReport(BaseModel):
    """Pydantic model for crossing-number lower bounds read off an invariant"""

    exponents: dict[str, VariableExponents] = Field(default_factory=dict)
    n_o_bound: int = 0
    n_real_bound: int = 0
    o_i_bounds: dict[str, int] = Field(default_factory=dict)  # z_1 -> bound
    l_ij_bounds: dict[str, int] = Field(default_factory=dict)  # w_1_2 -> bound
    n_v_bound: int = 0
    z_span: Optional[int] = None  # conjecture check only
    flags: Flags = Field(default_factory=Flags)


class InvariantRecord(BaseModel):
    """Pydantic model for the JSON form of one computed invariant"""

    family: str
    gauss_code: str
    writhe: int
    polynomial: str
    bounds: BoundsReport
    flags: Flags
    raw_determinant: str
    matrix_size: int

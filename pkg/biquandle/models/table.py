from typing import Any

from pydantic import BaseModel, ValidationInfo, field_validator

from biquandle.knots import Diagram, parse_gauss_code


class TableEntry(BaseModel):
    """Pydantic model for one line of a knot table"""

    name: str  # 3.1, 4.96, ...
    code: str

    @field_validator("name", "code", mode="before")
    def strip_text(cls: Any, v: Any) -> Any:
        if isinstance(v, str):
            return v.strip()
        return v

    @field_validator("name")
    def name_not_empty(cls: Any, v: str) -> str:
        if not v:
            raise ValueError("Table entry without a name")
        return v

    @field_validator("code")
    def code_parses(cls: Any, v: str, info: ValidationInfo) -> str:
        permissive = bool(info.context and info.context.get("permissive_signs"))
        return parse_gauss_code(v, permissive_signs=permissive).serialize()

    def diagram(self) -> Diagram:
        return parse_gauss_code(self.code)

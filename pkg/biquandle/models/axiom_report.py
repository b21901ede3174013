from pydantic import BaseModel, computed_field


class SwitchCheck(BaseModel):
    """Pydantic model for the single-switch axiom checks of one switch"""

    switch: str
    role: str  # biquandle / parity / link / virtual
    invertible: bool
    units_off_diagonal: bool
    units_off_diagonal_inverse: bool
    axiom4: bool
    axiom4_required: bool

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        required = self.invertible and self.units_off_diagonal and self.units_off_diagonal_inverse
        return required and (self.axiom4 or not self.axiom4_required)


class IdentityCheck(BaseModel):
    """Pydantic model for one mixed Yang-Baxter identity"""

    name: str
    passed: bool


class AxiomReport(BaseModel):
    """Pydantic model for the verification of a whole rule set"""

    family: str
    components: int
    switches: list[SwitchCheck]
    identities: list[IdentityCheck]

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.switches) and all(i.passed for i in self.identities)

    def failures(self) -> list[str]:
        failed = [f"switch {s.switch} ({s.role})" for s in self.switches if not s.passed]
        return failed + [f"identity {i.name}" for i in self.identities if not i.passed]

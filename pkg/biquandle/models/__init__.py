from biquandle.models.axiom_report import AxiomReport, IdentityCheck, SwitchCheck
from biquandle.models.batch import BatchReport, BatchRow, BatchSummary, ConjectureViolation, Detection
from biquandle.models.invariant import BoundsReport, Flags, InvariantRecord, VariableExponents
from biquandle.models.table import TableEntry

__all__ = [
    "AxiomReport",
    "BatchReport",
    "BatchRow",
    "BatchSummary",
    "BoundsReport",
    "ConjectureViolation",
    "Detection",
    "Flags",
    "IdentityCheck",
    "InvariantRecord",
    "SwitchCheck",
    "TableEntry",
    "VariableExponents",
]

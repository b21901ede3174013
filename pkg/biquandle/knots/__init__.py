from biquandle.knots.gauss_code import (
    Arc,
    Chord,
    CrossingCountError,
    Diagram,
    GaussCodeError,
    MalformedPassError,
    MissingSignError,
    Pass,
    PassKind,
    PassKindError,
    PassLocation,
    RealCrossing,
    SignedVirtualError,
    SignMismatchError,
    VirtualCrossing,
    parse_gauss_code,
    serialize,
    writhe,
)
from biquandle.knots.moves import KinkOrder, MoveError, R2Variant, r1_insert, r1_remove, r2_insert, r2_remove
from biquandle.knots.parity import (
    CrossingLabel,
    ParityKind,
    ParityLabeling,
    ParityReport,
    classify,
    parity_counts,
    parity_well_defined_check,
)

__all__ = [
    "Arc",
    "Chord",
    "CrossingCountError",
    "CrossingLabel",
    "Diagram",
    "GaussCodeError",
    "KinkOrder",
    "MalformedPassError",
    "MissingSignError",
    "MoveError",
    "ParityKind",
    "ParityLabeling",
    "ParityReport",
    "Pass",
    "PassKind",
    "PassKindError",
    "PassLocation",
    "R2Variant",
    "RealCrossing",
    "SignMismatchError",
    "SignedVirtualError",
    "VirtualCrossing",
    "classify",
    "parity_counts",
    "parity_well_defined_check",
    "parse_gauss_code",
    "r1_insert",
    "r1_remove",
    "r2_insert",
    "r2_remove",
    "serialize",
    "writhe",
]

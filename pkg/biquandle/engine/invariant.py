"""
Invariant polynomials of diagrams under a rule family.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from biquandle.engine.bounds import derive_bounds
from biquandle.engine.normal_form import canonicalize, equal_up_to_unit
from biquandle.engine.relations import assemble_relations, presentation_matrix
from biquandle.knots import Diagram, classify, writhe
from biquandle.models.invariant import BoundsReport, InvariantRecord
from biquandle.ring import CoefficientDomain, LaurentPoly, determinant, study_determinant
from biquandle.switches import Family, rule_set

QuaternionUnitsLike = Optional[Sequence[str]]


@dataclass(frozen=True)
class InvariantResult:
    family: Family
    diagram: Diagram
    raw_det: LaurentPoly
    canonical: LaurentPoly
    writhe: int
    matrix_size: int
    bounds: BoundsReport
    reference: Optional[LaurentPoly] = None  # canonical value of the family's odd-evidence reference

    def to_record(self) -> InvariantRecord:
        return InvariantRecord(
            family=self.family.value,
            gauss_code=self.diagram.serialize(),
            writhe=self.writhe,
            polynomial=str(self.canonical),
            bounds=self.bounds,
            flags=self.bounds.flags,
            raw_determinant=str(self.raw_det),
            matrix_size=self.matrix_size,
        )


def _determinant_of(d: Diagram, family: Family, quaternion_units: QuaternionUnitsLike) -> tuple[LaurentPoly, int]:
    if d.crossing_count == 0 or d.has_empty_component():
        return LaurentPoly.zero(), 0
    rules = rule_set(family, d.component_count, quaternion_units)
    matrix = presentation_matrix(assemble_relations(d, classify(d), rules))
    if matrix.domain is CoefficientDomain.QUATERNION:
        return study_determinant(matrix).narrow(), matrix.rows
    return determinant(matrix), matrix.rows


def compute_invariant(
    d: Diagram,
    family: Union[str, Family],
    quaternion_units: QuaternionUnitsLike = None,
) -> InvariantResult:
    """
    Compute the canonical invariant polynomial of a diagram, with its crossing-number bounds.

    Args:
        d: the diagram
        family: rule family name
        quaternion_units: (U, V) for the quaternionic families, e.g. ("i", "j")
    """
    chosen = Family.lookup(family)
    raw, size = _determinant_of(d, chosen, quaternion_units)
    wr = writhe(d)
    canonical = canonicalize(raw, wr)
    logging.debug(f"{chosen.value} of {d}: {canonical}")

    reference = None
    if chosen.odd_evidence_reference is not None:
        reference_raw, _ = _determinant_of(d, chosen.odd_evidence_reference, quaternion_units)
        reference = canonicalize(reference_raw, wr)

    result = InvariantResult(chosen, d, raw, canonical, wr, size, BoundsReport(), reference)
    bounds = derive_bounds(result, d)
    return InvariantResult(chosen, d, raw, canonical, wr, size, bounds, reference)


@dataclass(frozen=True)
class Comparison:
    family: Family
    first: LaurentPoly
    second: LaurentPoly

    @property
    def distinguishes(self) -> bool:
        return not equal_up_to_unit(self.first, self.second)


def compare_diagrams(
    first: Diagram, second: Diagram, family: Union[str, Family], quaternion_units: QuaternionUnitsLike = None
) -> Comparison:
    a = compute_invariant(first, family, quaternion_units)
    b = compute_invariant(second, family, quaternion_units)
    return Comparison(a.family, a.canonical, b.canonical)

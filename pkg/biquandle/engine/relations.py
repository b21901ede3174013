"""
Crossing relations and the presentation matrix.

Arc p of a component leaves pass p, so the incoming arc at pass p is p - 1 and the outgoing arc is p. At a real
crossing let X be the under strand when the sign is positive and the over strand when it is negative, and Y the
other one. With M the forward matrix at positive crossings and the inverse at negative ones,

    (Y_out, X_out) = M (X_in, Y_in)

At a virtual crossing X is the second occurrence in code order and M is the virtual map, so the first occurrence
picks up alpha and the second alpha^-1.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Optional

from biquandle.knots import Arc, Diagram, ParityLabeling, PassLocation, classify
from biquandle.ring import CoefficientDomain, LaurentPoly, RingMatrix
from biquandle.switches import MissingSwitchError, RuleSet


class PresentationError(ValueError):
    """Relations that do not cover every arc exactly once"""


@dataclass(frozen=True)
class Relation:
    """output = sum(coefficient * arc), coefficients multiplied on the left"""

    output: Arc
    terms: dict[Arc, LaurentPoly] = field(default_factory=dict)

    def __str__(self) -> str:
        body = " + ".join(f"({c})*{_arc_name(a)}" for a, c in sorted(self.terms.items(), key=_arc_key))
        return f"{_arc_name(self.output)} = {body or '0'}"


def _arc_key(item: tuple[Arc, LaurentPoly]) -> tuple[int, int]:
    return item[0].component, item[0].position


def _arc_name(arc: Arc) -> str:
    return f"a{arc.component}_{arc.position}"


def _pair_relations(d: Diagram, x: PassLocation, y: PassLocation, m: RingMatrix) -> tuple[Relation, Relation]:
    x_in, y_in = d.incoming_arc(x), d.incoming_arc(y)
    y_out = Relation(d.outgoing_arc(y), _combine(x_in, m[0, 0], y_in, m[0, 1]))
    x_out = Relation(d.outgoing_arc(x), _combine(x_in, m[1, 0], y_in, m[1, 1]))
    return y_out, x_out


def _combine(first: Arc, a: LaurentPoly, second: Arc, b: LaurentPoly) -> dict[Arc, LaurentPoly]:
    terms: dict[Arc, LaurentPoly] = {}
    for arc, coefficient in ((first, a), (second, b)):
        if not coefficient:
            continue
        total = terms[arc] + coefficient if arc in terms else coefficient
        if total:
            terms[arc] = total
        else:
            terms.pop(arc, None)
    return terms


def assemble_relations(d: Diagram, labeling: Optional[ParityLabeling], rules: RuleSet) -> list[Relation]:
    """
    Two relations per real or virtual crossing, ordered by output arc.

    Args:
        d: the diagram
        labeling: parity labels of the real crossings (computed when None)
        rules: the switch assignment
    """
    labels = labeling if labeling is not None else classify(d)
    relations: list[Relation] = []
    for crossing_id, crossing in d.real_crossings.items():
        switch = rules.switch_for(labels[crossing_id])
        if crossing.sign > 0:
            relations.extend(_pair_relations(d, crossing.under, crossing.over, switch.forward))
        else:
            relations.extend(_pair_relations(d, crossing.over, crossing.under, switch.inverse))

    if d.virtual_crossings and rules.virtual_map is None:
        raise MissingSwitchError(f"{rules.family.value} has no map for virtual crossings")
    for virtual in d.virtual_crossings.values():
        assert rules.virtual_map is not None
        relations.extend(_pair_relations(d, virtual.second, virtual.first, rules.virtual_map.forward))

    return sorted(relations, key=lambda r: (r.output.component, r.output.position))


def presentation_matrix(relations: list[Relation]) -> RingMatrix:
    """Row i is relation i minus its output arc; columns follow the sorted output arcs."""
    if not relations:
        raise PresentationError("No relations to present")
    domain = next((c.domain for r in relations for c in r.terms.values()), CoefficientDomain.INT)
    arcs = sorted((r.output for r in relations), key=lambda a: (a.component, a.position))
    index = {arc: i for i, arc in enumerate(arcs)}
    if len(index) != len(arcs):
        raise PresentationError("An arc is the output of more than one relation")

    size = len(arcs)
    rows = [[LaurentPoly.zero(domain) for _ in range(size)] for _ in range(size)]
    for relation in relations:
        row = index[relation.output]
        for arc, coefficient in relation.terms.items():
            if arc not in index:
                raise PresentationError(f"Arc {_arc_name(arc)} is never an output")
            rows[row][index[arc]] = rows[row][index[arc]] + coefficient
        rows[row][row] = rows[row][row] - 1
    logging.debug(f"Presentation matrix {size}x{size}")
    return RingMatrix.from_rows(rows, domain)

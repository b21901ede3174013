"""
Crossing-number lower bounds read off the exponents of an invariant.

For a bounded variable v let e = max(|e_max|, |e_min|) over the terms of the canonical polynomial.

- knots: the odd-crossing count is at least e, rounded up to even (a knot has an even number of odd crossings),
  and the real-crossing count is at least e + 1 when e > 0
- links: o_i >= e(z_i) and l_ij >= e(w_i_j), with no rounding
- virtual crossings: n_v >= e(alpha), for the base point the code starts at; alpha values follow the order in which
  the code meets the two passes of a virtual crossing, so such results carry the base_point_dependent flag
"""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING, Optional

from biquandle.engine.normal_form import equal_up_to_unit
from biquandle.knots import Diagram
from biquandle.models.invariant import BoundsReport, Flags, VariableExponents
from biquandle.ring import ALPHA, LaurentPoly, Var, Z
from biquandle.switches import rule_set

if TYPE_CHECKING:
    from biquandle.engine.invariant import InvariantResult


def exponents_of(p: LaurentPoly, var: Var) -> VariableExponents:
    found = p.exponent_range(var)
    if found is None:
        return VariableExponents()
    return VariableExponents(e_max=found[0], e_min=found[1])


def _round_up_even(e: int) -> int:
    return e + 1 if e % 2 else e


def _odd_variable(variables: tuple[Var, ...], is_knot: bool) -> Optional[Var]:
    """The variable carrying the odd-crossing count of a knot"""
    if Z in variables:
        return Z
    first = Var.component(1)
    if is_knot and first in variables:
        return first
    return None


def derive_bounds(res: InvariantResult, d: Diagram) -> BoundsReport:
    family = res.family
    variables = rule_set(family, d.component_count).bounded_variables
    p = res.canonical
    exponents = {str(v): exponents_of(p, v) for v in variables}

    o_i = {name: e.e for name, e in exponents.items() if name.startswith("z_")}
    l_ij = {name: e.e for name, e in exponents.items() if name.startswith("w_")}

    odd_var = _odd_variable(variables, d.is_knot)
    z_span = None
    n_o = 0
    n_real = 0
    if odd_var is not None:
        e = exponents[str(odd_var)].e
        z_span = exponents[str(odd_var)].span
        if d.is_knot:
            n_o = _round_up_even(e)
            n_real = e + 1 if e > 0 else 0
        else:
            n_o = e
    if not d.is_knot and o_i:
        n_o = sum(o_i.values())
    n_real = max(n_real, n_o + sum(l_ij.values()))

    n_v = exponents[str(ALPHA)].e if ALPHA in variables else 0

    evidence = None
    if family.odd_evidence_reference is not None and res.reference is not None:
        evidence = not equal_up_to_unit(p, res.reference)
    nonclassical = (not p.is_zero()) if not family.is_quaternionic else None
    base_point_dependent = family.has_virtual_map and d.virtual_count > 0
    if base_point_dependent:
        logging.warning(f"{family.value} of {d} depends on the base point: virtual passes are read in code order")
    return BoundsReport(
        exponents=exponents,
        n_o_bound=n_o,
        n_real_bound=n_real,
        o_i_bounds=o_i,
        l_ij_bounds=l_ij,
        n_v_bound=n_v,
        z_span=z_span,
        flags=Flags(
            nonclassical=nonclassical,
            has_odd_crossing_evidence=evidence,
            base_point_dependent=base_point_dependent,
        ),
    )


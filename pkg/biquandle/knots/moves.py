"""
Reidemeister I and II moves on Gauss codes, with their inverses.

Sites are (component, arc) pairs: arc p of a component sits between pass p and pass p+1, and an empty component
has the single site arc 0. New passes go right after pass p. Fresh crossing ids are max + 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence, Union

from biquandle.knots.gauss_code import Diagram, Pass, PassKind

Site = tuple[int, int]
SignLike = Union[int, str]


class MoveError(ValueError):
    """Raised for invalid move sites and for removals whose pattern does not match"""


class KinkOrder(str, Enum):
    OU = "OU"
    UO = "UO"


@dataclass(frozen=True)
class R2Variant:
    """Shape of an inserted bigon.

    sign is the sign of the first new crossing (the second gets the opposite one); over_first makes the strand at
    site A the over strand; parallel makes the strand at site B meet the two crossings in the same order as A.
    """

    sign: int = 1
    over_first: bool = True
    parallel: bool = False


def _as_sign(sign: SignLike) -> int:
    if sign in (1, "+"):
        return 1
    if sign in (-1, "-"):
        return -1
    raise MoveError(f"Sign must be + or -, got {sign!r}")


def _check_site(d: Diagram, site: Site) -> None:
    component, arc = site
    if not 0 <= component < d.component_count:
        raise MoveError(f"No component {component}")
    size = len(d.components[component])
    if not 0 <= arc < max(size, 1):
        raise MoveError(f"No arc {arc} on component {component} ({size} passes)")


def _insert(d: Diagram, insertions: Sequence[tuple[Site, Sequence[Pass]]]) -> Diagram:
    components = [list(passes) for passes in d.components]
    # later positions first so earlier insertion points stay valid
    for (component, arc), new_passes in sorted(insertions, key=lambda item: item[0], reverse=True):
        at = arc + 1 if components[component] else 0
        components[component][at:at] = list(new_passes)
    return Diagram(tuple(tuple(passes) for passes in components))


def _delete(d: Diagram, crossing_ids: set[int]) -> Diagram:
    return Diagram(
        tuple(
            tuple(p for p in passes if p.is_virtual or p.crossing_id not in crossing_ids) for passes in d.components
        )
    )


def _cyclically_adjacent(d: Diagram, component: int, first: int, second: int) -> bool:
    size = len(d.components[component])
    return (first + 1) % size == second


def r1_insert(
    d: Diagram, component: int, arc: int, sign: SignLike, order: Union[KinkOrder, str] = KinkOrder.OU
) -> Diagram:
    """Add a kink: two adjacent passes of one fresh crossing with the given sign."""
    _check_site(d, (component, arc))
    crossing_sign = _as_sign(sign)
    kink_order = KinkOrder(order)
    crossing_id = d.next_crossing_id()
    over = Pass(PassKind.OVER, crossing_id, crossing_sign)
    under = Pass(PassKind.UNDER, crossing_id, crossing_sign)
    passes = (over, under) if kink_order is KinkOrder.OU else (under, over)
    return _insert(d, [((component, arc), passes)])


def r1_remove(d: Diagram, crossing_id: int) -> Diagram:
    """Remove a kink; its two passes must be cyclically adjacent on one component."""
    crossing = d.real_crossings.get(crossing_id)
    if crossing is None:
        raise MoveError(f"No real crossing {crossing_id}")
    if not crossing.is_self_crossing:
        raise MoveError(f"Crossing {crossing_id} joins two components and cannot be a kink")
    component = crossing.over.component
    o, u = crossing.over.position, crossing.under.position
    if not (_cyclically_adjacent(d, component, o, u) or _cyclically_adjacent(d, component, u, o)):
        raise MoveError(f"The passes of crossing {crossing_id} are not adjacent")
    return _delete(d, {crossing_id})


def r2_insert(d: Diagram, site_a: Site, site_b: Site, variant: R2Variant = R2Variant()) -> Diagram:
    """Add a bigon between the strands at two sites.

    With the default variant the strand at site A gets (O a +, O b -) and the strand at site B gets (U b -, U a +).
    """
    _check_site(d, site_a)
    _check_site(d, site_b)
    if tuple(site_a) == tuple(site_b):
        raise MoveError("The two sites of a second Reidemeister move must differ")
    sign = _as_sign(variant.sign)
    a = d.next_crossing_id()
    b = a + 1
    kind_a = PassKind.OVER if variant.over_first else PassKind.UNDER
    kind_b = kind_a.opposite()
    strand_a = (Pass(kind_a, a, sign), Pass(kind_a, b, -sign))
    if variant.parallel:
        strand_b = (Pass(kind_b, a, sign), Pass(kind_b, b, -sign))
    else:
        strand_b = (Pass(kind_b, b, -sign), Pass(kind_b, a, sign))
    return _insert(d, [(tuple(site_a), strand_a), (tuple(site_b), strand_b)])  # type: ignore[list-item]


def r2_remove(d: Diagram, crossing_ids: tuple[int, int]) -> Diagram:
    """Remove a bigon: opposite signs, over passes adjacent and under passes adjacent."""
    a, b = crossing_ids
    if a == b:
        raise MoveError("A bigon needs two different crossings")
    first, second = d.real_crossings.get(a), d.real_crossings.get(b)
    if first is None or second is None:
        raise MoveError(f"No real crossings {a} and {b}")
    if first.sign == second.sign:
        raise MoveError(f"Crossings {a} and {b} have equal signs")
    for x, y in ((first.over, second.over), (first.under, second.under)):
        if x.component != y.component or not (
            _cyclically_adjacent(d, x.component, x.position, y.position)
            or _cyclically_adjacent(d, x.component, y.position, x.position)
        ):
            raise MoveError(f"Crossings {a} and {b} do not form a removable bigon")
    return _delete(d, {a, b})

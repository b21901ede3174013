"""
Named assignments of switches to crossing kinds.

A rule set holds one switch per (parity kind, component) for even and odd self-crossings, one per component pair for
link crossings, and optionally the map placed at virtual crossings.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Optional, Sequence, Union

from biquandle.knots.parity import CrossingLabel, ParityKind
from biquandle.ring import ALPHA, CoefficientDomain, Quaternion, Var, Z, parse_quaternion_unit
from biquandle.switches.switch import (
    Switch,
    SwitchError,
    alexander,
    link_twist,
    manturov_twist,
    p2,
    quaternionic,
    z_twist,
)


class UnknownFamilyError(SwitchError):
    pass


class MissingSwitchError(SwitchError):
    """A diagram has a crossing kind the rule set has no switch for"""


class Family(str, Enum):
    SAWOLLEK = "sawollek"
    Z_PARITY = "z-parity"
    P2_PARITY = "p2-parity"
    LINK_PARITY = "link-parity"
    ALPHA_SAWOLLEK = "alpha-sawollek"
    ALPHA_LINK_PARITY = "alpha-link-parity"
    QUATERNIONIC = "quaternionic"
    Z_PARITY_QUATERNIONIC = "z-parity-quaternionic"

    @classmethod
    def lookup(cls, name: Union[str, Family]) -> Family:
        try:
            return cls(name)
        except ValueError:
            raise UnknownFamilyError(f"Unknown family {name!r}; expected one of {', '.join(FAMILY_NAMES)}") from None

    @property
    def is_quaternionic(self) -> bool:
        return self in (Family.QUATERNIONIC, Family.Z_PARITY_QUATERNIONIC)

    @property
    def has_virtual_map(self) -> bool:
        return self in (Family.ALPHA_SAWOLLEK, Family.ALPHA_LINK_PARITY)

    @property
    def base(self) -> Family:
        """The family without its virtual map"""
        if self is Family.ALPHA_SAWOLLEK:
            return Family.SAWOLLEK
        if self is Family.ALPHA_LINK_PARITY:
            return Family.LINK_PARITY
        return self

    @property
    def odd_evidence_reference(self) -> Optional[Family]:
        """Family whose invariant ignores parity, compared against to detect odd crossings"""
        if self is Family.Z_PARITY:
            return Family.SAWOLLEK
        if self is Family.Z_PARITY_QUATERNIONIC:
            return Family.QUATERNIONIC
        return None


FAMILY_NAMES = tuple(f.value for f in Family)

QuaternionUnits = tuple[Quaternion, Quaternion]
DEFAULT_QUATERNION_UNITS = ("i", "j")


@dataclass(frozen=True)
class RuleSet:
    family: Family
    components: int
    even: dict[int, Switch]
    odd: dict[int, Switch]
    link: dict[tuple[int, int], Switch] = field(default_factory=dict)
    virtual_map: Optional[Switch] = None
    bounded_variables: tuple[Var, ...] = ()

    @property
    def domain(self) -> CoefficientDomain:
        return self.even[1].domain

    def switch_for(self, label: CrossingLabel) -> Switch:
        if label.kind is ParityKind.LINK:
            pair = (label.components[0], label.components[1])
            found = self.link.get(pair)
        elif label.kind is ParityKind.ODD:
            found = self.odd.get(label.component)
        else:
            found = self.even.get(label.component)
        if found is None:
            raise MissingSwitchError(f"{self.family.value} has no switch for {label} crossings")
        return found

    def all_switches(self) -> list[tuple[str, Switch]]:
        """(role, switch) pairs, each distinct switch once"""
        seen: dict[str, tuple[str, Switch]] = {}
        for role, switches in (
            ("biquandle", list(self.even.values())),
            ("parity", list(self.odd.values())),
            ("link", list(self.link.values())),
            ("virtual", [self.virtual_map] if self.virtual_map is not None else []),
        ):
            for switch in switches:
                seen.setdefault(switch.name, (role, switch))
        return list(seen.values())


def _units(quaternion_units: Union[Sequence[str], QuaternionUnits, None]) -> QuaternionUnits:
    raw = quaternion_units or DEFAULT_QUATERNION_UNITS
    if len(raw) != 2:
        raise SwitchError(f"Expected two quaternion units, got {raw!r}")
    u, v = (q if isinstance(q, Quaternion) else parse_quaternion_unit(q) for q in raw)
    return u, v


def rule_set(
    family: Union[str, Family],
    components: int = 1,
    quaternion_units: Union[Sequence[str], QuaternionUnits, None] = None,
) -> RuleSet:
    """
    Build the rule set of a named family for a diagram with the given number of components.

    Args:
        family: one of FAMILY_NAMES
        components: number of link components (1 for a knot)
        quaternion_units: (U, V) for the quaternionic families, default ("i", "j")
    """
    chosen = Family.lookup(family)
    if components < 1:
        raise SwitchError("A rule set needs at least one component")
    ids = range(1, components + 1)
    pairs = list(combinations(ids, 2))
    base = chosen.base

    domain = CoefficientDomain.QUATERNION if chosen.is_quaternionic else CoefficientDomain.INT
    if chosen.is_quaternionic:
        biquandle = quaternionic(*_units(quaternion_units))
    else:
        biquandle = alexander()
    even = {c: biquandle for c in ids}
    bounded: list[Var] = []

    if base in (Family.SAWOLLEK, Family.QUATERNIONIC):
        odd = dict(even)
        link = {pair: biquandle for pair in pairs}
    else:
        if base is Family.P2_PARITY:
            shared = p2()
            odd = {c: shared for c in ids}
        elif base is Family.LINK_PARITY:
            odd = {c: z_twist(c, domain) for c in ids}
            bounded.extend(Var.component(c) for c in ids)
        else:
            shared = z_twist(None, domain)
            odd = {c: shared for c in ids}
            bounded.append(Z)
        link = {pair: link_twist(*pair, domain) for pair in pairs}
        bounded.extend(Var.pair(*pair) for pair in pairs)

    virtual_map = None
    if chosen.has_virtual_map:
        virtual_map = manturov_twist(domain)
        bounded.append(ALPHA)
    return RuleSet(chosen, components, even, odd, link, virtual_map, tuple(bounded))

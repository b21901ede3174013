"""
Signed oriented Gauss codes, extended with virtual-crossing passes.

Grammar (whitespace ignored everywhere):

    code      := component (';' component)*
    component := pass (',' pass)*  |  empty
    pass      := ('O' | '0' | 'U') id ('+' | '-')  |  'V' id
    id        := [1-9][0-9]*

Real and virtual crossing ids live in separate namespaces, so "O1-,...,V1" names two different crossings.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Iterator, Optional


class GaussCodeError(ValueError):
    """Base class for Gauss code validation failures; position is the global pass index"""

    def __init__(self, message: str, position: Optional[int] = None, token: Optional[str] = None) -> None:
        self.position = position
        self.token = token
        where = ""
        if position is not None:
            where = f" at pass {position}" + (f" ({token!r})" if token is not None else "")
        super().__init__(f"{message}{where}")


class MalformedPassError(GaussCodeError):
    pass


class MissingSignError(GaussCodeError):
    pass


class SignedVirtualError(GaussCodeError):
    pass


class CrossingCountError(GaussCodeError):
    pass


class PassKindError(GaussCodeError):
    pass


class SignMismatchError(GaussCodeError):
    pass


class PassKind(str, Enum):
    OVER = "O"
    UNDER = "U"
    VIRTUAL = "V"

    def opposite(self) -> PassKind:
        if self is PassKind.OVER:
            return PassKind.UNDER
        if self is PassKind.UNDER:
            return PassKind.OVER
        return self


@dataclass(frozen=True)
class Pass:
    kind: PassKind
    crossing_id: int
    sign: Optional[int] = None  # +1 / -1, None iff virtual

    @property
    def is_virtual(self) -> bool:
        return self.kind is PassKind.VIRTUAL

    def __str__(self) -> str:
        if self.is_virtual:
            return f"V{self.crossing_id}"
        return f"{self.kind.value}{self.crossing_id}{'+' if self.sign == 1 else '-'}"


@dataclass(frozen=True)
class PassLocation:
    component: int
    position: int


@dataclass(frozen=True)
class Arc:
    """Arc `position` of a component runs from pass `position` to the next pass (cyclically)"""

    component: int
    position: int


@dataclass(frozen=True)
class RealCrossing:
    crossing_id: int
    sign: int
    over: PassLocation
    under: PassLocation

    @property
    def is_self_crossing(self) -> bool:
        return self.over.component == self.under.component


@dataclass(frozen=True)
class VirtualCrossing:
    crossing_id: int
    first: PassLocation
    second: PassLocation


@dataclass(frozen=True)
class Chord:
    """Chord of a self-crossing: joins the over pass to the under pass on one core circle"""

    crossing_id: int
    component: int
    over_position: int
    under_position: int
    sign: int


@dataclass(frozen=True)
class Diagram:
    """A validated extended Gauss code: one cyclic pass sequence per component"""

    components: tuple[tuple[Pass, ...], ...] = field(default_factory=lambda: ((),))

    def __post_init__(self) -> None:
        if not self.components:
            raise GaussCodeError("A diagram has at least one component")
        _ = self.real_crossings

    # -- indices ------------------------------------------------------------------------------------------------

    def _locations(self) -> Iterator[tuple[int, PassLocation, Pass]]:
        index = 0
        for c, passes in enumerate(self.components):
            for p, item in enumerate(passes):
                yield index, PassLocation(c, p), item
                index += 1

    @cached_property
    def real_crossings(self) -> dict[int, RealCrossing]:
        real: dict[int, list[tuple[int, PassLocation, Pass]]] = {}
        virtual: dict[int, list[tuple[int, PassLocation, Pass]]] = {}
        for index, location, item in self._locations():
            if item.is_virtual:
                if item.sign is not None:
                    raise SignedVirtualError("Virtual passes carry no sign", index, str(item))
                virtual.setdefault(item.crossing_id, []).append((index, location, item))
            else:
                if item.sign not in (1, -1):
                    raise MissingSignError(f"Crossing {item.crossing_id} has no sign", index, str(item))
                real.setdefault(item.crossing_id, []).append((index, location, item))

        crossings: dict[int, RealCrossing] = {}
        for crossing_id, occurrences in real.items():
            if len(occurrences) != 2:
                raise CrossingCountError(
                    f"Crossing {crossing_id} appears {len(occurrences)} time(s), expected 2", occurrences[-1][0]
                )
            (i1, loc1, p1), (i2, loc2, p2) = occurrences
            if p1.kind is p2.kind:
                raise PassKindError(f"Crossing {crossing_id} is {p1.kind.value} at both passes", i2, str(p2))
            if p1.sign != p2.sign:
                raise SignMismatchError(f"Crossing {crossing_id} has different signs at its passes", i2, str(p2))
            over, under = (loc1, loc2) if p1.kind is PassKind.OVER else (loc2, loc1)
            crossings[crossing_id] = RealCrossing(crossing_id, p1.sign, over, under)  # type: ignore[arg-type]

        virtual_crossings: dict[int, VirtualCrossing] = {}
        for crossing_id, occurrences in virtual.items():
            if len(occurrences) != 2:
                raise CrossingCountError(
                    f"Virtual crossing {crossing_id} appears {len(occurrences)} time(s), expected 2",
                    occurrences[-1][0],
                )
            virtual_crossings[crossing_id] = VirtualCrossing(crossing_id, occurrences[0][1], occurrences[1][1])
        object.__setattr__(self, "_virtual_crossings", virtual_crossings)
        return dict(sorted(crossings.items()))

    @property
    def virtual_crossings(self) -> dict[int, VirtualCrossing]:
        _ = self.real_crossings
        return dict(sorted(self.__dict__["_virtual_crossings"].items()))

    # -- simple facts -------------------------------------------------------------------------------------------

    @property
    def crossing_count(self) -> int:
        return len(self.real_crossings)

    @property
    def virtual_count(self) -> int:
        return len(self.virtual_crossings)

    @property
    def component_count(self) -> int:
        return len(self.components)

    @property
    def is_knot(self) -> bool:
        return len(self.components) == 1

    def has_empty_component(self) -> bool:
        return any(len(passes) == 0 for passes in self.components)

    def pass_at(self, location: PassLocation) -> Pass:
        return self.components[location.component][location.position]

    def arcs(self) -> list[Arc]:
        return [Arc(c, p) for c, passes in enumerate(self.components) for p in range(len(passes))]

    def incoming_arc(self, location: PassLocation) -> Arc:
        size = len(self.components[location.component])
        return Arc(location.component, (location.position - 1) % size)

    def outgoing_arc(self, location: PassLocation) -> Arc:
        return Arc(location.component, location.position)

    def next_crossing_id(self) -> int:
        return max(self.real_crossings, default=0) + 1

    def chords(self) -> list[Chord]:
        return [
            Chord(c.crossing_id, c.over.component, c.over.position, c.under.position, c.sign)
            for c in self.real_crossings.values()
            if c.is_self_crossing
        ]

    # -- transformations ----------------------------------------------------------------------------------------

    def rotate(self, component: int, k: int) -> Diagram:
        """Move the base point of one component forward by k passes."""
        passes = self.components[component]
        if not passes:
            return self
        k %= len(passes)
        rotated = passes[k:] + passes[:k]
        return Diagram(self.components[:component] + (rotated,) + self.components[component + 1 :])

    def mirror(self) -> Diagram:
        """Swap over and under and flip every sign."""
        return Diagram(
            tuple(
                tuple(
                    p if p.is_virtual else Pass(p.kind.opposite(), p.crossing_id, -p.sign)  # type: ignore[operator]
                    for p in passes
                )
                for passes in self.components
            )
        )

    def reverse(self) -> Diagram:
        """Reverse the orientation of every component."""
        return Diagram(tuple(tuple(reversed(passes)) for passes in self.components))

    def without_virtuals(self) -> Diagram:
        return Diagram(tuple(tuple(p for p in passes if not p.is_virtual) for passes in self.components))

    def serialize(self) -> str:
        return ";".join(",".join(str(p) for p in passes) for passes in self.components)

    def __str__(self) -> str:
        return self.serialize()


_PASS_PATTERN = re.compile(r"^([OU0V])([1-9][0-9]*)([+-]?)$")
_WHITESPACE = re.compile(r"\s+")


def parse_gauss_code(text: str, permissive_signs: bool = False) -> Diagram:
    """
    Parse an extended Gauss code into a validated Diagram.

    Args:
        text: the code, components separated by ';' and passes by ','
        permissive_signs: when True, real passes written without a sign default to '+'
    """
    cleaned = _WHITESPACE.sub("", text)
    components: list[tuple[Pass, ...]] = []
    index = 0
    for component_text in cleaned.split(";"):
        passes: list[Pass] = []
        if component_text:
            for token in component_text.split(","):
                match = _PASS_PATTERN.match(token)
                if match is None:
                    raise MalformedPassError("Malformed pass", index, token)
                kind_text, id_text, sign_text = match.groups()
                kind = PassKind.OVER if kind_text == "0" else PassKind(kind_text)
                if kind is PassKind.VIRTUAL:
                    if sign_text:
                        raise SignedVirtualError("Virtual passes carry no sign", index, token)
                    passes.append(Pass(kind, int(id_text)))
                else:
                    if not sign_text:
                        if not permissive_signs:
                            raise MissingSignError("Real pass without a sign", index, token)
                        sign_text = "+"
                    passes.append(Pass(kind, int(id_text), 1 if sign_text == "+" else -1))
                index += 1
        components.append(tuple(passes))
    return Diagram(tuple(components))


def serialize(d: Diagram) -> str:
    return d.serialize()


def writhe(d: Diagram) -> int:
    """Positive minus negative real crossings; virtual crossings do not count."""
    return sum(c.sign for c in d.real_crossings.values())

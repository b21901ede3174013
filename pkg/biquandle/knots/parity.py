"""
Even / odd / link labels for the real crossings of a diagram.

A self-crossing of component c is odd when an odd number of passes lies strictly between its two passes, counting
only passes of self-crossings of c. Virtual passes and passes of link crossings never count. Component numbers in
labels start at 1, matching the z_i and w_i_j variable names.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum

from biquandle.knots.gauss_code import Diagram


class ParityKind(str, Enum):
    EVEN = "even"
    ODD = "odd"
    LINK = "link"


@dataclass(frozen=True)
class CrossingLabel:
    kind: ParityKind
    components: tuple[int, ...]  # (c,) for even/odd, (i, j) with i < j for link

    @classmethod
    def even(cls, component: int) -> CrossingLabel:
        return cls(ParityKind.EVEN, (component,))

    @classmethod
    def odd(cls, component: int) -> CrossingLabel:
        return cls(ParityKind.ODD, (component,))

    @classmethod
    def link(cls, i: int, j: int) -> CrossingLabel:
        return cls(ParityKind.LINK, tuple(sorted((i, j))))

    @property
    def component(self) -> int:
        return self.components[0]

    def __str__(self) -> str:
        if self.kind is ParityKind.LINK:
            return f"link({self.components[0]},{self.components[1]})"
        return self.kind.value


@dataclass(frozen=True)
class ParityLabeling:
    labels: dict[int, CrossingLabel] = field(default_factory=dict)

    def __getitem__(self, crossing_id: int) -> CrossingLabel:
        return self.labels[crossing_id]

    def __len__(self) -> int:
        return len(self.labels)

    def kinds(self) -> set[ParityKind]:
        return {label.kind for label in self.labels.values()}

    def odd_crossings(self) -> list[int]:
        return sorted(i for i, label in self.labels.items() if label.kind is ParityKind.ODD)

    def link_crossings(self) -> list[int]:
        return sorted(i for i, label in self.labels.items() if label.kind is ParityKind.LINK)

    def as_strings(self) -> dict[int, str]:
        return {i: str(label) for i, label in sorted(self.labels.items())}


@dataclass(frozen=True)
class ParityReport:
    """Between-counts (inner, outer) for every self-crossing; both must have the same parity"""

    counts: dict[int, tuple[int, int]]
    failures: list[int]

    @property
    def passed(self) -> bool:
        return not self.failures


def parity_counts(d: Diagram) -> dict[int, tuple[int, int]]:
    """(inner, outer) between-counts of each self-crossing, inner being the stretch after the first pass."""
    chords = d.chords()
    counts: dict[int, tuple[int, int]] = {}
    for chord in sorted(chords, key=lambda c: c.crossing_id):
        low, high = sorted((chord.over_position, chord.under_position))
        ends = [
            position
            for other in chords
            if other.component == chord.component and other.crossing_id != chord.crossing_id
            for position in (other.over_position, other.under_position)
        ]
        inner = sum(1 for position in ends if low < position < high)
        counts[chord.crossing_id] = (inner, len(ends) - inner)
    return counts


def classify(d: Diagram) -> ParityLabeling:
    labels: dict[int, CrossingLabel] = {}
    counts = parity_counts(d)
    for crossing_id, crossing in d.real_crossings.items():
        if not crossing.is_self_crossing:
            labels[crossing_id] = CrossingLabel.link(crossing.over.component + 1, crossing.under.component + 1)
            continue
        inner, _ = counts[crossing_id]
        component = crossing.over.component + 1
        labels[crossing_id] = CrossingLabel.odd(component) if inner % 2 else CrossingLabel.even(component)
    return ParityLabeling(dict(sorted(labels.items())))


def parity_well_defined_check(d: Diagram) -> ParityReport:
    counts = parity_counts(d)
    failures = [i for i, (inner, outer) in counts.items() if inner % 2 != outer % 2]
    if failures:
        logging.warning(f"Parity is not well defined for crossings {failures} of {d}")
    return ParityReport(counts, failures)

"""
Linear switches: 2x2 invertible matrices acting on a column (a, b) of arc labels.

Builtins:

    B   = [[0, s], [t, 1 - st]]                 generalized Alexander
    P1  = B
    P2  = [[0, s], [t, st - 1]]
    P3  = [[0, z], [z^-1, 0]]                   z-twist (z_i per component)
    L   = [[0, w_i_j], [w_i_j^-1, 0]]            link crossings
    V   = [[0, alpha], [alpha^-1, 0]]           Manturov twist at virtual crossings
    QB  = [[1 + U, tV], [-t^-1 V, 1 + U]]        quaternionic, after the t change of basis

Twists are involutions, so their inverse is the switch itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from biquandle.ring import (
    ALPHA,
    T,
    Z,
    CoefficientDomain,
    LaurentPoly,
    Quaternion,
    RingMatrix,
    Var,
    format_quaternion,
    is_pure_unit,
)


class SwitchError(ValueError):
    """Unknown builtin, missing parameters or inadmissible quaternion units"""


@dataclass(frozen=True)
class Switch:
    forward: RingMatrix
    inverse: RingMatrix
    name: str

    @property
    def domain(self) -> CoefficientDomain:
        return self.forward.domain

    @classmethod
    def from_forward(cls, forward: RingMatrix, name: str) -> Switch:
        """Inverse from the adjugate; needs a commutative domain and a unit determinant."""
        if not forward.domain.is_commutative:
            raise SwitchError("from_forward needs a commutative coefficient domain")
        a, b = forward[0, 0], forward[0, 1]
        c, d = forward[1, 0], forward[1, 1]
        det = a * d - b * c
        if not det.is_unit():
            raise SwitchError(f"{name} has determinant {det}, which is not a unit")
        inv = det.unit_inverse()
        inverse = RingMatrix.from_rows([[d * inv, -b * inv], [-c * inv, a * inv]], forward.domain)
        return cls(forward, inverse, name)

    @classmethod
    def twist(cls, var: Var, domain: CoefficientDomain = CoefficientDomain.INT, name: Optional[str] = None) -> Switch:
        x = LaurentPoly.var(var, 1, domain)
        matrix = RingMatrix.from_rows([[0, x], [x.unit_inverse(), 0]], domain)
        return cls(matrix, matrix, name or f"twist[{var}]")

    def is_involution(self) -> bool:
        return self.forward == self.inverse

    def __str__(self) -> str:
        return self.name


def _poly(text: str, domain: CoefficientDomain = CoefficientDomain.INT) -> LaurentPoly:
    return LaurentPoly.parse(text, domain)


def alexander() -> Switch:
    forward = RingMatrix.from_rows([[0, _poly("s")], [_poly("t"), _poly("1 - s*t")]])
    inverse = RingMatrix.from_rows([[_poly("1 - s^-1*t^-1"), _poly("t^-1")], [_poly("s^-1"), 0]])
    return Switch(forward, inverse, "B")


def p2() -> Switch:
    return Switch.from_forward(RingMatrix.from_rows([[0, _poly("s")], [_poly("t"), _poly("s*t - 1")]]), "P2")


def z_twist(component: Optional[int] = None, domain: CoefficientDomain = CoefficientDomain.INT) -> Switch:
    var = Z if component is None else Var.component(component)
    return Switch.twist(var, domain, f"P3[{var}]")


def link_twist(i: int, j: int, domain: CoefficientDomain = CoefficientDomain.INT) -> Switch:
    var = Var.pair(i, j)
    return Switch.twist(var, domain, f"L[{var}]")


def manturov_twist(domain: CoefficientDomain = CoefficientDomain.INT) -> Switch:
    return Switch.twist(ALPHA, domain, "V[alpha]")


def check_quaternion_units(u: Quaternion, v: Quaternion) -> None:
    shown = f"{format_quaternion(u)} and {format_quaternion(v)}"
    if not (is_pure_unit(u) and is_pure_unit(v)):
        raise SwitchError(f"U and V must be among +-i, +-j, +-k, got {shown}")
    if u.b * v.b + u.c * v.c + u.d * v.d != 0:
        raise SwitchError(f"U and V must be orthogonal, got {shown}")


def quaternionic(u: Quaternion, v: Quaternion) -> Switch:
    check_quaternion_units(u, v)
    domain = CoefficientDomain.QUATERNION
    one = LaurentPoly.one(domain)
    t = LaurentPoly.var(T, 1, domain)
    t_inv = LaurentPoly.var(T, -1, domain)
    big_u = LaurentPoly.constant(u, domain)
    big_v = LaurentPoly.constant(v, domain)
    forward = RingMatrix.from_rows([[one + big_u, t * big_v], [-(t_inv * big_v), one + big_u]], domain)
    inverse = RingMatrix.from_rows([[one - big_u, -(t * big_v)], [t_inv * big_v, one - big_u]], domain)
    return Switch(forward, inverse, f"QB[{format_quaternion(u)},{format_quaternion(v)}]")


BUILTIN_NAMES = ("B", "P1", "P2", "P3", "L", "V", "QB")


def builtin(
    name: str,
    component: Optional[int] = None,
    pair: Optional[Sequence[int]] = None,
    units: Optional[tuple[Quaternion, Quaternion]] = None,
    domain: CoefficientDomain = CoefficientDomain.INT,
) -> Switch:
    """
    Build one of the named switches.

    Args:
        name: one of B, P1, P2, P3, L, V, QB
        component: component number for P3 (z_i instead of z)
        pair: component pair for L
        units: (U, V) for QB
        domain: coefficient domain for the twists (P3, L, V)
    """
    if name in ("B", "P1"):
        switch = alexander()
        return switch if name == "B" else Switch(switch.forward, switch.inverse, "P1")
    if name == "P2":
        return p2()
    if name == "P3":
        return z_twist(component, domain)
    if name == "L":
        if pair is None or len(pair) != 2 or pair[0] == pair[1]:
            raise SwitchError("L needs a pair of distinct component numbers")
        return link_twist(pair[0], pair[1], domain)
    if name == "V":
        return manturov_twist(domain)
    if name == "QB":
        if units is None:
            raise SwitchError("QB needs quaternion units (U, V)")
        return quaternionic(*units)
    raise SwitchError(f"Unknown switch {name!r}; expected one of {', '.join(BUILTIN_NAMES)}")


def left_embed(m: RingMatrix) -> RingMatrix:
    """M x Id acting on (a, b, c)"""
    return RingMatrix.from_rows(
        [[m[0, 0], m[0, 1], 0], [m[1, 0], m[1, 1], 0], [0, 0, 1]],
        m.domain,
    )


def right_embed(m: RingMatrix) -> RingMatrix:
    """Id x M acting on (a, b, c)"""
    return RingMatrix.from_rows(
        [[1, 0, 0], [0, m[0, 0], m[0, 1]], [0, m[1, 0], m[1, 1]]],
        m.domain,
    )


def mutants(switch: Switch) -> Iterator[Switch]:
    """Each forward entry perturbed by +1.

    The inverse is recomputed when the perturbed matrix is still invertible over a commutative domain; otherwise
    the old inverse is kept and the mutant fails the invertibility check.
    """
    domain = switch.domain
    for r in range(2):
        for c in range(2):
            rows = [[switch.forward[i, j] for j in range(2)] for i in range(2)]
            rows[r][c] = rows[r][c] + 1
            forward = RingMatrix.from_rows(rows, domain)
            name = f"{switch.name}[{r},{c}]+1"
            try:
                yield Switch.from_forward(forward, name)
            except SwitchError:
                yield Switch(forward, switch.inverse, name)

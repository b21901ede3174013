"""
Coefficient domains for Laurent polynomials: integers, Gaussian integers and integral quaternions.

Integers and Gaussian integers are the sympy ground domains ZZ and ZZ_I, so polynomial arithmetic over them runs
in sympy polynomial rings. Quaternion coefficients are sympy Quaternions with integer parts; their product is
never commutative, so callers must keep factor order.
"""

from __future__ import annotations

from enum import Enum
from typing import Union

from sympy import Quaternion
from sympy.polys.domains import ZZ, ZZ_I
from sympy.polys.domains.domain import Domain
from sympy.polys.domains.gaussiandomains import GaussianInteger


class DomainMismatchError(TypeError):
    """Raised when two values from different coefficient domains are combined"""


class InexactDivisionError(ArithmeticError):
    """Raised when an exact division has a remainder"""


Coefficient = Union[int, GaussianInteger, Quaternion]

QUATERNION_UNITS = {
    "i": Quaternion(0, 1, 0, 0),
    "j": Quaternion(0, 0, 1, 0),
    "k": Quaternion(0, 0, 0, 1),
}


def parse_quaternion_unit(text: str) -> Quaternion:
    """Read one of "i", "-i", "j", "-j", "k", "-k"."""
    token = text.strip()
    sign = 1
    if token.startswith(("-", "+")):
        sign = -1 if token[0] == "-" else 1
        token = token[1:]
    if token not in QUATERNION_UNITS:
        raise ValueError(f"Not a quaternion unit: {text!r}")
    unit = QUATERNION_UNITS[token]
    return unit if sign == 1 else -unit


def quaternion_parts(q: Quaternion) -> tuple[int, int, int, int]:
    return int(q.a), int(q.b), int(q.c), int(q.d)


def quaternion_is_zero(q: Quaternion) -> bool:
    return not any(quaternion_parts(q))


def quaternion_norm(q: Quaternion) -> int:
    return sum(part * part for part in quaternion_parts(q))


def is_pure_unit(q: Quaternion) -> bool:
    """True for the six units +-i, +-j, +-k"""
    return q.a == 0 and quaternion_norm(q) == 1


def gaussian(re: int, im: int = 0) -> GaussianInteger:
    return ZZ_I(re, im)


def format_quaternion(q: Quaternion) -> str:
    return _format_components(list(zip(quaternion_parts(q), ("", "i", "j", "k"))))


def _format_components(parts: list[tuple[int, str]]) -> str:
    nonzero = [(value, unit) for value, unit in parts if value != 0]
    if not nonzero:
        return "0"
    pieces: list[str] = []
    for value, unit in nonzero:
        magnitude = "" if unit and abs(value) == 1 else str(abs(value))
        sign = "-" if value < 0 else ("+" if pieces else "")
        pieces.append(f"{sign}{magnitude}{unit}")
    text = "".join(pieces)
    return f"({text})" if len(nonzero) > 1 else text


class CoefficientDomain(str, Enum):
    """Tag for the coefficient ring of a polynomial or matrix"""

    INT = "int"
    GAUSSIAN = "gaussian"
    QUATERNION = "quaternion"

    @property
    def is_commutative(self) -> bool:
        return self is not CoefficientDomain.QUATERNION

    @property
    def ground(self) -> Domain:
        """The sympy domain polynomial rings are built over"""
        if self is CoefficientDomain.INT:
            return ZZ
        if self is CoefficientDomain.GAUSSIAN:
            return ZZ_I
        raise DomainMismatchError("Quaternion coefficients have no commutative sympy ground domain")

    def zero(self) -> Coefficient:
        return self.coerce(0)

    def one(self) -> Coefficient:
        return self.coerce(1)

    def coerce(self, value: object) -> Coefficient:
        """Lift an int (or a value already in this domain) into the domain."""
        if isinstance(value, bool):
            value = int(value)
        if self is CoefficientDomain.QUATERNION:
            if isinstance(value, Quaternion):
                return value
            if isinstance(value, GaussianInteger):
                return Quaternion(int(value.x), int(value.y), 0, 0)
            if isinstance(value, int) or ZZ.of_type(value):
                return Quaternion(int(value), 0, 0, 0)  # type: ignore[call-overload]
        elif self is CoefficientDomain.GAUSSIAN:
            if isinstance(value, GaussianInteger):
                return value
            if isinstance(value, int) or ZZ.of_type(value):
                return ZZ_I(value, 0)
        elif isinstance(value, int) or ZZ.of_type(value):
            return ZZ(value)
        raise DomainMismatchError(f"Cannot use {value!r} as a {self.value} coefficient")

    def public(self, value: Coefficient) -> Coefficient:
        """Plain int for the integer domain, the sympy element otherwise."""
        return int(value) if self is CoefficientDomain.INT else value  # type: ignore[arg-type]

    def is_zero(self, value: Coefficient) -> bool:
        if isinstance(value, Quaternion):
            return quaternion_is_zero(value)
        return not value

    def norm(self, value: Coefficient) -> int:
        if isinstance(value, Quaternion):
            return quaternion_norm(value)
        if isinstance(value, GaussianInteger):
            return int(value.x * value.x + value.y * value.y)
        return int(value) * int(value)

    def is_unit(self, value: Coefficient) -> bool:
        return self.norm(value) == 1

    def unit_inverse(self, value: Coefficient) -> Coefficient:
        if not self.is_unit(value):
            raise InexactDivisionError(f"{value} is not a unit")
        if isinstance(value, Quaternion):
            a, b, c, d = quaternion_parts(value)
            return Quaternion(a, -b, -c, -d)
        if isinstance(value, GaussianInteger):
            return ZZ_I(value.x, -value.y)
        return value

    def signed_text(self, value: Coefficient) -> tuple[bool, str]:
        """(negative, magnitude text) for printing a term; compound values print in parentheses"""
        if isinstance(value, Quaternion):
            text = format_quaternion(value)
            if text.startswith("-"):
                return True, text[1:]
            return False, text
        if isinstance(value, GaussianInteger):
            re, im = int(value.x), int(value.y)
            if im == 0:
                return re < 0, str(abs(re))
            if re == 0:
                return im < 0, "I" if abs(im) == 1 else f"{abs(im)}*I"
            return False, f"({ZZ_I.to_sympy(value)})"
        number = int(value)
        return number < 0, str(abs(number))

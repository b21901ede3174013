"""
Sparse multivariate Laurent polynomials with exact coefficients.

Over Z and Z[i] a polynomial is a sympy ring element in the variables it uses, times a shift monomial: the ring
element has minimum exponent 0 in every variable and every variable has a nonzero exponent in some term. This
form is unique, so equality and hashing work on it directly. Quaternion polynomials keep the same layout with a
map from exponent tuples to sympy Quaternions instead of a ring element. Values are immutable.
"""

from __future__ import annotations

import re
from tokenize import TokenError
from dataclasses import dataclass
from enum import Enum
from functools import cached_property, lru_cache, total_ordering
from typing import Any, Iterable, Iterator, Mapping, Optional, Sequence, Union

from sympy import Add, Expr, I, Integer, Symbol, expand
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations
from sympy.polys.orderings import lex
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import PolyElement, PolyRing

from biquandle.ring.coefficients import (
    Coefficient,
    CoefficientDomain,
    DomainMismatchError,
    InexactDivisionError,
)

_VAR_PATTERN = re.compile(r"^(s|t|z|alpha|z_(\d+)|w_(\d+)_(\d+))$")


@total_ordering
@dataclass(frozen=True)
class Var:
    """A commuting variable. Fixed order: s < t < z < z_1 < z_2 < ... < w_1_2 < ... < alpha"""

    name: str

    def __post_init__(self) -> None:
        match = _VAR_PATTERN.match(self.name)
        if match is None:
            raise ValueError(f"Unknown variable name: {self.name!r}")
        if match.group(3) is not None and int(match.group(3)) >= int(match.group(4)):
            raise ValueError(f"Pair variable must be written with i < j: {self.name!r}")

    @cached_property
    def sort_key(self) -> tuple[int, ...]:
        match = _VAR_PATTERN.match(self.name)
        assert match is not None
        if match.group(2) is not None:
            return (3, int(match.group(2)))
        if match.group(3) is not None:
            return (4, int(match.group(3)), int(match.group(4)))
        return ({"s": 0, "t": 1, "z": 2, "alpha": 5}[self.name],)

    @property
    def symbol(self) -> Symbol:
        return Symbol(self.name)

    def __lt__(self, other: Var) -> bool:
        return self.sort_key < other.sort_key

    def __str__(self) -> str:
        return self.name

    @classmethod
    def component(cls, i: int) -> Var:
        """Per-component parity variable z_i (components numbered from 1)."""
        return cls(f"z_{i}")

    @classmethod
    def pair(cls, i: int, j: int) -> Var:
        """Link-crossing variable w_{i,j} for an unordered component pair."""
        lo, hi = sorted((i, j))
        return cls(f"w_{lo}_{hi}")


S = Var("s")
T = Var("t")
Z = Var("z")
ALPHA = Var("alpha")

VarLike = Union[Var, str]
Exponents = tuple[int, ...]


def _as_var(var: VarLike) -> Var:
    return var if isinstance(var, Var) else Var(var)


@dataclass(frozen=True)
class Monomial:
    """Product of variables with nonzero integer exponents, kept sorted by variable order"""

    exponents: tuple[tuple[Var, int], ...] = ()

    @classmethod
    def from_map(cls, exponents: Mapping[Var, int]) -> Monomial:
        return cls(tuple(sorted((v, e) for v, e in exponents.items() if e != 0)))

    @classmethod
    def of(cls, var: VarLike, exp: int = 1) -> Monomial:
        return cls.from_map({_as_var(var): exp})

    def as_dict(self) -> dict[Var, int]:
        return dict(self.exponents)

    def degree(self, var: Var) -> int:
        for v, e in self.exponents:
            if v == var:
                return e
        return 0

    @property
    def total_degree(self) -> int:
        return sum(e for _, e in self.exponents)

    def is_one(self) -> bool:
        return not self.exponents

    def __mul__(self, other: Monomial) -> Monomial:
        merged = self.as_dict()
        for v, e in other.exponents:
            merged[v] = merged.get(v, 0) + e
        return Monomial.from_map(merged)

    def inverse(self) -> Monomial:
        return Monomial(tuple((v, -e) for v, e in self.exponents))

    def __truediv__(self, other: Monomial) -> Monomial:
        return self * other.inverse()

    def __str__(self) -> str:
        return "*".join(str(v) if e == 1 else f"{v}^{e}" for v, e in self.exponents)


class PolyOp(str, Enum):
    ADD = "add"
    SUB = "sub"
    MUL = "mul"


@lru_cache(maxsize=None)
def poly_ring(variables: tuple[Var, ...], domain: CoefficientDomain) -> PolyRing:
    """The sympy ring Z[variables] or Z[i][variables], lex ordered in variable order."""
    return PolyRing(tuple(v.symbol for v in variables), domain.ground, lex)


def _union(a: tuple[Var, ...], b: Iterable[Var]) -> tuple[Var, ...]:
    return tuple(sorted(set(a).union(b)))


def _add(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x + y for x, y in zip(a, b))


class LaurentPoly:
    """Exact Laurent polynomial over one coefficient domain"""

    __slots__ = ("_vars", "_shift", "_body", "_domain", "_hash")

    _vars: tuple[Var, ...]
    _shift: Exponents
    _body: Any
    _domain: CoefficientDomain
    _hash: Optional[int]

    def __init__(
        self,
        terms: Optional[Mapping[Monomial, Coefficient]] = None,
        domain: CoefficientDomain = CoefficientDomain.INT,
    ) -> None:
        terms = terms or {}
        variables = tuple(sorted({v for m in terms for v, _ in m.exponents}))
        laurent: dict[Exponents, Coefficient] = {}
        for monomial, coefficient in terms.items():
            laurent[tuple(monomial.degree(v) for v in variables)] = domain.coerce(coefficient)
        built = LaurentPoly._from_laurent(laurent, variables, domain)
        self._vars, self._shift, self._body = built._vars, built._shift, built._body
        self._domain = domain
        self._hash = None

    @classmethod
    def _make(
        cls, variables: tuple[Var, ...], shift: Exponents, body: Any, domain: CoefficientDomain
    ) -> LaurentPoly:
        poly = cls.__new__(cls)
        poly._vars, poly._shift, poly._body = variables, shift, body
        poly._domain = domain
        poly._hash = None
        return poly

    @classmethod
    def _from_laurent(
        cls, laurent: Mapping[Exponents, Coefficient], variables: tuple[Var, ...], domain: CoefficientDomain
    ) -> LaurentPoly:
        """Normal form from a map of full Laurent exponent tuples over `variables`."""
        laurent = {e: c for e, c in laurent.items() if not domain.is_zero(c)}
        if not laurent:
            return cls._make((), (), _empty_body(domain), domain)
        keep = [k for k in range(len(variables)) if any(e[k] for e in laurent)]
        shift = tuple(min(e[k] for e in laurent) for k in keep)
        kept = tuple(variables[k] for k in keep)
        reduced = {tuple(e[k] - low for k, low in zip(keep, shift)): c for e, c in laurent.items()}
        return cls._make(kept, shift, _body_from_map(reduced, kept, domain), domain)

    @classmethod
    def _from_body(
        cls, body: Any, variables: tuple[Var, ...], shift: Exponents, domain: CoefficientDomain
    ) -> LaurentPoly:
        """Normal form of shift * body, where body is aligned with `variables` and has no negative exponents."""
        if not body:
            return cls._make((), (), _empty_body(domain), domain)
        monomials = list(body.keys())
        for k, offset in enumerate(shift):
            low = min(m[k] for m in monomials)
            if low != 0 or (offset == 0 and max(m[k] for m in monomials) == 0):
                laurent = {_add(m, shift): c for m, c in body.items()}
                return cls._from_laurent(laurent, variables, domain)
        return cls._make(variables, shift, body, domain)

    @classmethod
    def from_ring_element(
        cls, element: PolyElement, variables: Sequence[Var], shift: Sequence[int], domain: CoefficientDomain
    ) -> LaurentPoly:
        """shift * element, for a sympy ring element over poly_ring(variables, domain)."""
        return cls._from_body(element, tuple(variables), tuple(shift), domain)

    # -- constructors -------------------------------------------------------------------------------------------

    @classmethod
    def zero(cls, domain: CoefficientDomain = CoefficientDomain.INT) -> LaurentPoly:
        return cls._make((), (), _empty_body(domain), domain)

    @classmethod
    def one(cls, domain: CoefficientDomain = CoefficientDomain.INT) -> LaurentPoly:
        return cls.constant(1, domain)

    @classmethod
    def constant(cls, value: Coefficient, domain: CoefficientDomain = CoefficientDomain.INT) -> LaurentPoly:
        return cls._from_laurent({(): domain.coerce(value)}, (), domain)

    @classmethod
    def var(cls, var: VarLike, exp: int = 1, domain: CoefficientDomain = CoefficientDomain.INT) -> LaurentPoly:
        return cls._from_laurent({(exp,): domain.one()}, (_as_var(var),), domain)

    @classmethod
    def term(
        cls, coefficient: Coefficient, monomial: Monomial, domain: CoefficientDomain = CoefficientDomain.INT
    ) -> LaurentPoly:
        return cls({monomial: coefficient}, domain)

    @classmethod
    def parse(cls, text: str, domain: CoefficientDomain = CoefficientDomain.INT) -> LaurentPoly:
        """Read the canonical serialization (or any integer Laurent expression sympy can parse).

        Gaussian text writes the imaginary unit as I. Quaternion polynomials are read with integer coefficients.
        """
        if not text.strip():
            raise ValueError("Empty polynomial text")
        names = set(re.findall(r"[A-Za-z_][A-Za-z0-9_]*", text)) - {"I"}
        local_dict = {name: Var(name).symbol for name in names}
        try:
            expr = parse_expr(
                text, local_dict=local_dict, transformations=standard_transformations + (convert_xor,)
            )
        except (SyntaxError, TokenError, TypeError, ValueError) as error:
            raise ValueError(f"Cannot read polynomial {text!r}: {error}") from error
        return cls.from_expr(expr, domain)

    @classmethod
    def from_expr(cls, expr: Expr, domain: CoefficientDomain = CoefficientDomain.INT) -> LaurentPoly:
        """Convert a sympy expression that expands to a Laurent polynomial with integer (or Gaussian) terms."""
        expanded = expand(expr)
        found: set[Var] = set()
        collected: list[tuple[int, int, dict[Var, int]]] = []
        for term in Add.make_args(expanded):
            coefficient, factors = term.as_coeff_mul()
            if not isinstance(coefficient, Integer):
                raise ValueError(f"Coefficient {coefficient} of {term} is not an integer")
            imaginary = 0
            exponents: dict[Var, int] = {}
            for factor in factors:
                if factor is I:
                    imaginary += 1
                    continue
                base, exp = factor.as_base_exp()
                if not isinstance(base, Symbol) or not isinstance(exp, Integer):
                    raise ValueError(f"{term} is not a Laurent monomial")
                var = Var(base.name)
                exponents[var] = exponents.get(var, 0) + int(exp)
            found.update(exponents)
            collected.append((int(coefficient), imaginary, exponents))

        if any(imaginary for _, imaginary, _ in collected) and domain is not CoefficientDomain.GAUSSIAN:
            raise ValueError(f"{expr} has imaginary coefficients; read it in the gaussian domain")
        variables = tuple(sorted(found))
        laurent: dict[Exponents, Coefficient] = {}
        for coefficient, imaginary, exponents in collected:
            key = tuple(exponents.get(v, 0) for v in variables)
            if imaginary:
                value = domain.ground(0, coefficient)
            else:
                value = domain.coerce(coefficient)
            laurent[key] = laurent[key] + value if key in laurent else value
        return cls._from_laurent(laurent, variables, domain)

    # -- accessors ----------------------------------------------------------------------------------------------

    @property
    def domain(self) -> CoefficientDomain:
        return self._domain

    def _laurent_items(self) -> Iterator[tuple[Exponents, Coefficient]]:
        for m, c in self._body.items():
            yield _add(m, self._shift), c

    def items(self) -> Iterator[tuple[Monomial, Coefficient]]:
        for exponents, coefficient in self._laurent_items():
            yield Monomial.from_map(dict(zip(self._vars, exponents))), self._domain.public(coefficient)

    @property
    def terms(self) -> Mapping[Monomial, Coefficient]:
        return dict(self.items())

    def __len__(self) -> int:
        return len(self._body)

    def is_zero(self) -> bool:
        return not self._body

    def __bool__(self) -> bool:
        return bool(self._body)

    def coefficient(self, monomial: Monomial) -> Coefficient:
        if any(v not in self._vars for v, _ in monomial.exponents):
            return self._domain.public(self._domain.zero())
        key = tuple(monomial.degree(v) - offset for v, offset in zip(self._vars, self._shift))
        value = self._body.get(key)
        return self._domain.public(value if value is not None else self._domain.zero())

    def variables(self) -> list[Var]:
        return list(self._vars)

    def exponent_range(self, var: VarLike) -> Optional[tuple[int, int]]:
        """(e_max, e_min) of var over all terms, or None for the zero polynomial."""
        if not self._body:
            return None
        v = _as_var(var)
        if v not in self._vars:
            return 0, 0
        k = self._vars.index(v)
        degrees = [m[k] for m in self._body.keys()]
        return max(degrees) + self._shift[k], min(degrees) + self._shift[k]

    def min_monomial(self, variables: Optional[Iterable[Var]] = None) -> Monomial:
        """Monomial of per-variable minimum exponents (restricted to `variables` when given)."""
        if not self._body:
            return Monomial()
        selected = set(variables) if variables is not None else set(self._vars)
        return Monomial.from_map({v: e for v, e in zip(self._vars, self._shift) if v in selected})

    def ring_element(self, variables: Sequence[Var], shift: Sequence[int]) -> PolyElement:
        """This polynomial divided by the shift monomial, as an element of poly_ring(variables, domain)."""
        variables = tuple(variables)
        if variables == self._vars and tuple(shift) == self._shift:
            return self._body
        offsets = dict(zip(variables, shift))
        positions = [variables.index(v) for v in self._vars]
        mapping: dict[Exponents, Coefficient] = {}
        for exponents, coefficient in self._laurent_items():
            key = [-offsets[v] for v in variables]
            for position, e in zip(positions, exponents):
                key[position] += e
            if min(key, default=0) < 0:
                raise ValueError(f"{self} has exponents below the shift {dict(offsets)}")
            mapping[tuple(key)] = coefficient
        return poly_ring(variables, self._domain).from_dict(mapping)

    # -- arithmetic ---------------------------------------------------------------------------------------------

    def _coerce(self, other: Union[LaurentPoly, Coefficient]) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            if other._domain is not self._domain:
                raise DomainMismatchError(
                    f"Cannot combine {self._domain.value} and {other._domain.value} polynomials"
                )
            return other
        return LaurentPoly.constant(self._domain.coerce(other), self._domain)

    def _offsets(self, variables: tuple[Var, ...]) -> Exponents:
        own = dict(zip(self._vars, self._shift))
        return tuple(own.get(v, 0) for v in variables)

    def _lift(self, variables: tuple[Var, ...], shift: Exponents) -> Any:
        if self._domain.is_commutative:
            return self.ring_element(variables, shift)
        positions = [variables.index(v) for v in self._vars]
        lifted: dict[Exponents, Coefficient] = {}
        for exponents, coefficient in self._laurent_items():
            key = [-offset for offset in shift]
            for position, e in zip(positions, exponents):
                key[position] += e
            lifted[tuple(key)] = coefficient
        return lifted

    def __add__(self, other: Union[LaurentPoly, Coefficient]) -> LaurentPoly:
        rhs = self._coerce(other)
        if not rhs._body:
            return self
        if not self._body:
            return rhs
        variables = self._vars if self._vars == rhs._vars else _union(self._vars, rhs._vars)
        shift = tuple(min(a, b) for a, b in zip(self._offsets(variables), rhs._offsets(variables)))
        left, right = self._lift(variables, shift), rhs._lift(variables, shift)
        if self._domain.is_commutative:
            total = left + right
        else:
            total = dict(left)
            for m, c in right.items():
                total[m] = total[m] + c if m in total else c
            total = {m: c for m, c in total.items() if not self._domain.is_zero(c)}
        return LaurentPoly._from_body(total, variables, shift, self._domain)

    def __radd__(self, other: Coefficient) -> LaurentPoly:
        return self._coerce(other) + self

    def __neg__(self) -> LaurentPoly:
        if self._domain.is_commutative:
            body = -self._body
        else:
            body = {m: -c for m, c in self._body.items()}
        return LaurentPoly._make(self._vars, self._shift, body, self._domain)

    def __sub__(self, other: Union[LaurentPoly, Coefficient]) -> LaurentPoly:
        return self + (-self._coerce(other))

    def __rsub__(self, other: Coefficient) -> LaurentPoly:
        return self._coerce(other) - self

    def __mul__(self, other: Union[LaurentPoly, Coefficient]) -> LaurentPoly:
        rhs = self._coerce(other)
        if not self._body or not rhs._body:
            return LaurentPoly.zero(self._domain)
        variables = self._vars if self._vars == rhs._vars else _union(self._vars, rhs._vars)
        left_shift, right_shift = self._offsets(variables), rhs._offsets(variables)
        left, right = self._lift(variables, left_shift), rhs._lift(variables, right_shift)
        if self._domain.is_commutative:
            product = left * right
        else:
            product = {}
            for m1, c1 in left.items():
                for m2, c2 in right.items():
                    m = _add(m1, m2)
                    c = c1 * c2
                    product[m] = product[m] + c if m in product else c
            product = {m: c for m, c in product.items() if not self._domain.is_zero(c)}
        return LaurentPoly._from_body(product, variables, _add(left_shift, right_shift), self._domain)

    def __rmul__(self, other: Coefficient) -> LaurentPoly:
        return self._coerce(other) * self

    def __pow__(self, exponent: int) -> LaurentPoly:
        if exponent < 0:
            return self.unit_inverse() ** (-exponent)
        if self._domain.is_commutative:
            shift = tuple(e * exponent for e in self._shift)
            return LaurentPoly._from_body(self._body**exponent, self._vars, shift, self._domain)
        result = LaurentPoly.one(self._domain)
        for _ in range(exponent):
            result = result * self
        return result

    def scale_monomial(self, monomial: Monomial) -> LaurentPoly:
        if not self._body or monomial.is_one():
            return self
        variables = _union(self._vars, (v for v, _ in monomial.exponents))
        own = self._offsets(variables)
        shift = tuple(e + monomial.degree(v) for v, e in zip(variables, own))
        return LaurentPoly._from_body(self._lift(variables, own), variables, shift, self._domain)

    # -- units --------------------------------------------------------------------------------------------------

    def unit_decomposition(self) -> Optional[tuple[Coefficient, Monomial]]:
        """(unit coefficient, monomial) when the polynomial is a unit of the Laurent ring, else None."""
        if len(self._body) != 1:
            return None
        ((monomial, coefficient),) = self.items()
        if not self._domain.is_unit(coefficient):
            return None
        return coefficient, monomial

    def is_unit(self) -> bool:
        return self.unit_decomposition() is not None

    def unit_inverse(self) -> LaurentPoly:
        decomposition = self.unit_decomposition()
        if decomposition is None:
            raise InexactDivisionError(f"{self} is not a unit")
        coefficient, monomial = decomposition
        inverse = self._domain.unit_inverse(self._domain.coerce(coefficient))
        return LaurentPoly({monomial.inverse(): inverse}, self._domain)

    def exact_div(self, divisor: LaurentPoly) -> LaurentPoly:
        """Exact quotient self / divisor in a commutative domain.

        Both ring parts are free of variable factors, so a Laurent quotient exists exactly when the ring parts
        divide in the polynomial ring; sympy does that division.
        """
        divisor = self._coerce(divisor)
        if not self._domain.is_commutative:
            raise DomainMismatchError("exact_div needs a commutative coefficient domain")
        if divisor.is_zero():
            raise InexactDivisionError("Division by the zero polynomial")
        if self.is_zero():
            return self
        if divisor.is_unit():
            return self * divisor.unit_inverse()
        variables = _union(self._vars, divisor._vars)
        numerator = self.ring_element(variables, self._offsets(variables))
        denominator = divisor.ring_element(variables, divisor._offsets(variables))
        try:
            quotient = numerator.exquo(denominator)
        except ExactQuotientFailed as error:
            raise InexactDivisionError(f"{self} is not divisible by {divisor}") from error
        shift = tuple(a - b for a, b in zip(self._offsets(variables), divisor._offsets(variables)))
        return LaurentPoly._from_body(quotient, variables, shift, self._domain)

    # -- substitution and normalization -------------------------------------------------------------------------

    def substitute(self, var: VarLike, value: LaurentPoly) -> LaurentPoly:
        """Replace var by value (value must be a unit when var appears with negative exponents)."""
        v = _as_var(var)
        result = LaurentPoly.zero(self._domain)
        for m, c in self.items():
            rest = Monomial.from_map({u: e for u, e in m.exponents if u != v})
            result = result + LaurentPoly({rest: c}, self._domain) * (value ** m.degree(v))
        return result

    def shift_to_min_zero(self, variables: Iterable[VarLike]) -> LaurentPoly:
        """Multiply by the monomial that moves the minimum exponent of each given variable to 0."""
        selected = [_as_var(v) for v in variables]
        return self.scale_monomial(self.min_monomial(selected).inverse())

    def narrow(self) -> LaurentPoly:
        """The same polynomial over Z when every Gaussian coefficient is real; otherwise self."""
        if self._domain is not CoefficientDomain.GAUSSIAN:
            return self
        if any(c.y for c in self._body.values()):
            return self
        ring = poly_ring(self._vars, CoefficientDomain.INT)
        body = ring.from_dict({m: int(c.x) for m, c in self._body.items()})
        return LaurentPoly._make(self._vars, self._shift, body, CoefficientDomain.INT)

    # -- comparison, hashing, printing --------------------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentPoly):
            return (
                self._domain is other._domain
                and self._vars == other._vars
                and self._shift == other._shift
                and self._body == other._body
            )
        if isinstance(other, int) and not isinstance(other, bool):
            return self == LaurentPoly.constant(other, self._domain)
        try:
            return self == self._coerce(other)  # type: ignore[arg-type]
        except DomainMismatchError:
            return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._domain, self._vars, self._shift, frozenset(self._body.items())))
        return self._hash

    def sorted_terms(self) -> list[tuple[Monomial, Coefficient]]:
        """Terms in print order: graded by total degree, then lexicographic in the variable order, highest first."""
        variables = self.variables()

        def key(item: tuple[Monomial, Coefficient]) -> tuple[int, ...]:
            monomial = item[0]
            return (-monomial.total_degree,) + tuple(-monomial.degree(v) for v in variables)

        return sorted(self.items(), key=key)

    def __str__(self) -> str:
        if not self._body:
            return "0"
        pieces: list[str] = []
        for monomial, coefficient in self.sorted_terms():
            negative, magnitude = self._domain.signed_text(coefficient)
            if monomial.is_one():
                body = magnitude
            elif magnitude == "1":
                body = str(monomial)
            else:
                body = f"{magnitude}*{monomial}"
            if not pieces:
                pieces.append(f"-{body}" if negative else body)
            else:
                pieces.append(f" - {body}" if negative else f" + {body}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r}, domain={self._domain.value})"


def _empty_body(domain: CoefficientDomain) -> Any:
    return poly_ring((), domain).zero if domain.is_commutative else {}


def _body_from_map(
    mapping: Mapping[Exponents, Coefficient], variables: tuple[Var, ...], domain: CoefficientDomain
) -> Any:
    if domain.is_commutative:
        return poly_ring(variables, domain).from_dict(dict(mapping))
    return dict(mapping)


def poly_arith(a: LaurentPoly, b: LaurentPoly, op: Union[PolyOp, str]) -> LaurentPoly:
    """add / sub / mul with a domain check; multiplication keeps a on the left."""
    if a.domain is not b.domain:
        raise DomainMismatchError(f"Cannot combine {a.domain.value} and {b.domain.value} polynomials")
    operation = PolyOp(op)
    if operation is PolyOp.ADD:
        return a + b
    if operation is PolyOp.SUB:
        return a - b
    return a * b


def monomial_unit_test(p: LaurentPoly) -> Optional[tuple[Coefficient, Monomial]]:
    return p.unit_decomposition()

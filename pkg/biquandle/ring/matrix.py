"""
Dense matrices of Laurent polynomials, exact determinants and the complex representation of quaternion matrices.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from sympy.polys.matrices import DomainMatrix

from biquandle.ring.coefficients import (
    Coefficient,
    CoefficientDomain,
    DomainMismatchError,
    gaussian,
    quaternion_parts,
)
from biquandle.ring.laurent import LaurentPoly, Monomial, Var, poly_ring

Entry = Union[LaurentPoly, Coefficient]


class DimensionError(ValueError):
    """Raised on shape mismatches and non-square determinants"""


@dataclass(frozen=True)
class RingMatrix:
    """rows x cols matrix of LaurentPoly entries sharing one coefficient domain"""

    entries: tuple[tuple[LaurentPoly, ...], ...]
    domain: CoefficientDomain = CoefficientDomain.INT

    @classmethod
    def from_rows(
        cls, rows: Sequence[Sequence[Entry]], domain: CoefficientDomain = CoefficientDomain.INT
    ) -> RingMatrix:
        built: list[tuple[LaurentPoly, ...]] = []
        width: Optional[int] = None
        for row in rows:
            if width is None:
                width = len(row)
            elif len(row) != width:
                raise DimensionError("All rows must have the same length")
            built.append(tuple(_as_entry(value, domain) for value in row))
        return cls(tuple(built), domain)

    @classmethod
    def identity(cls, n: int, domain: CoefficientDomain = CoefficientDomain.INT) -> RingMatrix:
        return cls.from_rows([[1 if r == c else 0 for c in range(n)] for r in range(n)], domain)

    @classmethod
    def zeros(cls, rows: int, cols: int, domain: CoefficientDomain = CoefficientDomain.INT) -> RingMatrix:
        return cls.from_rows([[0] * cols for _ in range(rows)], domain)

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, index: tuple[int, int]) -> LaurentPoly:
        r, c = index
        return self.entries[r][c]

    def __matmul__(self, other: RingMatrix) -> RingMatrix:
        return mat_mul(self, other)

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(str(e) for e in row) + "]" for row in self.entries)


def _as_entry(value: Entry, domain: CoefficientDomain) -> LaurentPoly:
    if isinstance(value, LaurentPoly):
        if value.domain is not domain:
            raise DomainMismatchError(f"Matrix entry in {value.domain.value}, expected {domain.value}")
        return value
    return LaurentPoly.constant(value, domain)


def mat_mul(a: RingMatrix, b: RingMatrix) -> RingMatrix:
    """Entrywise exact product; each term is A[r][k] * B[k][c] with A on the left."""
    if a.domain is not b.domain:
        raise DomainMismatchError(f"Cannot multiply {a.domain.value} and {b.domain.value} matrices")
    if a.cols != b.rows:
        raise DimensionError(f"Cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    zero = LaurentPoly.zero(a.domain)
    rows = []
    for r in range(a.rows):
        row = []
        for c in range(b.cols):
            total = zero
            for k in range(a.cols):
                left, right = a.entries[r][k], b.entries[k][c]
                if left and right:
                    total = total + left * right
            row.append(total)
        rows.append(tuple(row))
    return RingMatrix(tuple(rows), a.domain)


def _require_determinant_input(m: RingMatrix) -> None:
    if not m.is_square:
        raise DimensionError(f"Determinant of a non-square {m.rows}x{m.cols} matrix")
    if not m.domain.is_commutative:
        raise DomainMismatchError("Quaternion matrices go through quaternion_to_complex_rep before a determinant")


def cofactor_determinant(m: RingMatrix) -> LaurentPoly:
    """Laplace expansion down the rows, memoized on the set of remaining columns."""
    _require_determinant_input(m)
    n = m.rows
    cache: dict[tuple[int, ...], LaurentPoly] = {}

    def expand(row: int, columns: tuple[int, ...]) -> LaurentPoly:
        if row == n:
            return LaurentPoly.one(m.domain)
        if columns in cache:
            return cache[columns]
        total = LaurentPoly.zero(m.domain)
        for position, c in enumerate(columns):
            entry = m.entries[row][c]
            if entry.is_zero():
                continue
            minor = expand(row + 1, columns[:position] + columns[position + 1 :])
            term = entry * minor
            total = total - term if position % 2 else total + term
        cache[columns] = total
        return total

    return expand(0, tuple(range(n)))



def _lowest_exponent(entry: LaurentPoly, var: Var) -> int:
    found = entry.exponent_range(var)
    assert found is not None
    return found[1]


def bareiss_determinant(m: RingMatrix) -> LaurentPoly:
    """Fraction-free elimination in a sympy polynomial ring.

    Each row is divided by the monomial of its per-variable minimum exponents, which puts every entry in the
    polynomial ring. DomainMatrix runs Bareiss there and the row monomials are reattached at the end.
    """
    _require_determinant_input(m)
    if m.rows == 0:
        return LaurentPoly.one(m.domain)
    variables = tuple(sorted({v for row in m.entries for e in row for v in e.variables()}))
    extracted = [0] * len(variables)
    rows = []
    for row in m.entries:
        nonzero = [e for e in row if not e.is_zero()]
        if not nonzero:
            return LaurentPoly.zero(m.domain)
        shift = [min(_lowest_exponent(e, v) for e in nonzero) for v in variables]
        extracted = [total + low for total, low in zip(extracted, shift)]
        rows.append([e.ring_element(variables, shift) for e in row])
    ring = poly_ring(variables, m.domain)
    if not variables:
        constants = [[entry.LC for entry in row] for row in rows]
        det = ring.ground_new(DomainMatrix(constants, (m.rows, m.cols), m.domain.ground).det())
    else:
        det = DomainMatrix(rows, (m.rows, m.cols), ring.to_domain()).det()
    return LaurentPoly.from_ring_element(det, variables, extracted, m.domain)


def determinant(m: RingMatrix) -> LaurentPoly:
    """Exact determinant.

    Unit entries are used first as pivots (Schur-complement condensation, no division needed); the rest of the
    matrix goes through bareiss_determinant.
    """
    _require_determinant_input(m)
    size = m.rows
    work = [list(row) for row in m.entries]
    active_rows = list(range(size))
    active_cols = list(range(size))
    factor = LaurentPoly.one(m.domain)

    while active_rows:
        best: Optional[tuple[int, int, int]] = None
        row_counts = {r: sum(1 for c in active_cols if work[r][c]) for r in active_rows}
        col_counts = {c: sum(1 for r in active_rows if work[r][c]) for c in active_cols}
        for r in active_rows:
            for c in active_cols:
                entry = work[r][c]
                if entry and entry.is_unit():
                    cost = (row_counts[r] - 1) * (col_counts[c] - 1)
                    if best is None or cost < best[0]:
                        best = (cost, r, c)
        if best is None:
            break
        _, r, c = best
        pivot = work[r][c]
        pivot_inverse = pivot.unit_inverse()
        parity = active_rows.index(r) + active_cols.index(c)
        factor = factor * pivot if parity % 2 == 0 else factor * (-pivot)
        for i in active_rows:
            if i == r or not work[i][c]:
                continue
            multiplier = work[i][c] * pivot_inverse
            for j in active_cols:
                if j != c and work[r][j]:
                    work[i][j] = work[i][j] - multiplier * work[r][j]
        active_rows.remove(r)
        active_cols.remove(c)

    logging.debug(f"Unit condensation reduced a {size}x{size} determinant to {len(active_rows)}x{len(active_rows)}")
    if not active_rows:
        return factor
    rest = RingMatrix(tuple(tuple(work[r][c] for c in active_cols) for r in active_rows), m.domain)
    return factor * bareiss_determinant(rest)


def _complex_blocks(poly: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly, LaurentPoly, LaurentPoly]:
    """a+bi+cj+dk -> [[a+bi, c+di], [-c+di, a-bi]] coefficient-wise"""
    blocks: list[dict[Monomial, Coefficient]] = [{}, {}, {}, {}]
    for monomial, q in poly.items():
        a, b, c, d = quaternion_parts(q)  # type: ignore[arg-type]
        blocks[0][monomial] = gaussian(a, b)
        blocks[1][monomial] = gaussian(c, d)
        blocks[2][monomial] = gaussian(-c, d)
        blocks[3][monomial] = gaussian(a, -b)
    top_left, top_right, bottom_left, bottom_right = (
        LaurentPoly(block, CoefficientDomain.GAUSSIAN) for block in blocks
    )
    return top_left, top_right, bottom_left, bottom_right


def quaternion_to_complex_rep(m: RingMatrix) -> RingMatrix:
    """Replace every quaternion entry by its 2x2 complex block; an n x n matrix becomes 2n x 2n."""
    if m.domain is not CoefficientDomain.QUATERNION:
        raise DomainMismatchError("quaternion_to_complex_rep expects a quaternion matrix")
    out: list[list[LaurentPoly]] = [
        [LaurentPoly.zero(CoefficientDomain.GAUSSIAN)] * (2 * m.cols) for _ in range(2 * m.rows)
    ]
    for r, row in enumerate(m.entries):
        for c, entry in enumerate(row):
            top_left, top_right, bottom_left, bottom_right = _complex_blocks(entry)
            out[2 * r][2 * c], out[2 * r][2 * c + 1] = top_left, top_right
            out[2 * r + 1][2 * c], out[2 * r + 1][2 * c + 1] = bottom_left, bottom_right
    return RingMatrix(tuple(tuple(row) for row in out), CoefficientDomain.GAUSSIAN)


def study_determinant(m: RingMatrix) -> LaurentPoly:
    return determinant(quaternion_to_complex_rep(m))

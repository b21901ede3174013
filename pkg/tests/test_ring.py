import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from biquandle.ring import (
    CoefficientDomain,
    DimensionError,
    DomainMismatchError,
    InexactDivisionError,
    LaurentPoly,
    Monomial,
    PolyOp,
    Quaternion,
    RingMatrix,
    S,
    T,
    Var,
    Z,
    bareiss_determinant,
    cofactor_determinant,
    determinant,
    gaussian,
    mat_mul,
    monomial_unit_test,
    parse_quaternion_unit,
    poly_arith,
    quaternion_to_complex_rep,
    study_determinant,
)
from tests.conftest import poly

I, J, K = Quaternion(0, 1), Quaternion(0, 0, 1), Quaternion(0, 0, 0, 1)

VARIABLES = [S, T, Z]


@st.composite
def laurent_polys(draw: st.DrawFn) -> LaurentPoly:
    terms = draw(
        st.dictionaries(
            st.tuples(*(st.integers(-2, 2) for _ in VARIABLES)),
            st.integers(-3, 3),
            max_size=4,
        )
    )
    return LaurentPoly({Monomial.from_map(dict(zip(VARIABLES, exps))): c for exps, c in terms.items()})


@st.composite
def gaussian_polys(draw: st.DrawFn) -> LaurentPoly:
    terms = draw(
        st.dictionaries(
            st.tuples(st.integers(-1, 1), st.integers(-1, 1)),
            st.tuples(st.integers(-2, 2), st.integers(-2, 2)),
            max_size=3,
        )
    )
    return LaurentPoly(
        {Monomial.from_map({S: e[0], T: e[1]}): gaussian(*c) for e, c in terms.items()}, CoefficientDomain.GAUSSIAN
    )


@st.composite
def quaternion_polys(draw: st.DrawFn) -> LaurentPoly:
    terms = draw(st.dictionaries(st.integers(-1, 1), st.tuples(*(st.integers(-2, 2) for _ in range(4))), max_size=2))
    return LaurentPoly({Monomial.of(T, e): Quaternion(*c) for e, c in terms.items()}, CoefficientDomain.QUATERNION)


@st.composite
def matrix_pairs(
    draw: st.DrawFn, entries: st.SearchStrategy[LaurentPoly], domain: CoefficientDomain, max_size: int = 3
) -> tuple[RingMatrix, RingMatrix]:
    n = draw(st.integers(1, max_size))
    a, b = (RingMatrix.from_rows([[draw(entries) for _ in range(n)] for _ in range(n)], domain) for _ in range(2))
    return a, b


UNIT_COEFFICIENTS = {
    CoefficientDomain.INT: [1, -1],
    CoefficientDomain.GAUSSIAN: [gaussian(1), gaussian(-1), gaussian(0, 1), gaussian(0, -1)],
    CoefficientDomain.QUATERNION: [Quaternion(1), Quaternion(-1), I, -I, J, -J, K, -K],
}


@st.composite
def monomial_units(draw: st.DrawFn) -> LaurentPoly:
    domain = draw(st.sampled_from(list(CoefficientDomain)))
    coefficient = draw(st.sampled_from(UNIT_COEFFICIENTS[domain]))
    exps = draw(st.tuples(*(st.integers(-3, 3) for _ in VARIABLES)))
    return LaurentPoly({Monomial.from_map(dict(zip(VARIABLES, exps))): coefficient}, domain)


def random_poly(rng: random.Random, max_terms: int = 3) -> LaurentPoly:
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        monomial = Monomial.from_map({S: rng.randint(-1, 1), T: rng.randint(-1, 1)})
        terms[monomial] = rng.randint(-2, 2)
    return LaurentPoly(terms)


# -- polynomials ---------------------------------------------------------------------------------------------------


def test_zero_coefficients_are_dropped() -> None:
    p = poly("s - s")
    assert p.is_zero()
    assert str(p) == "0"


def test_printing_is_canonical() -> None:
    p = poly("-4*z^2 + 2*z^-4 + 4 + 2*z^4 - 4*z^-2")
    assert str(p) == "2*z^4 - 4*z^2 + 4 - 4*z^-2 + 2*z^-4"
    assert poly(str(p)) == p


def test_printing_omits_unit_coefficients() -> None:
    assert str(poly("s^-1*t^-1 - 1")) == "-1 + s^-1*t^-1"


def test_variable_names_are_validated() -> None:
    with pytest.raises(ValueError):
        Var("x")
    with pytest.raises(ValueError):
        Var("w_2_1")
    assert Var.pair(2, 1) == Var("w_1_2")
    assert sorted([Var("alpha"), Var("w_1_2"), Var("z_1"), Z, T, S]) == [
        S,
        T,
        Z,
        Var("z_1"),
        Var("w_1_2"),
        Var("alpha"),
    ]


def test_poly_arith() -> None:
    a, b = poly("s + 1"), poly("s - 1")
    assert poly_arith(a, b, PolyOp.ADD) == poly("2*s")
    assert poly_arith(a, b, "sub") == poly("2")
    assert poly_arith(a, b, PolyOp.MUL) == poly("s^2 - 1")


def test_negative_powers_need_units() -> None:
    assert poly("s*t") ** -2 == poly("s^-2*t^-2")
    with pytest.raises(InexactDivisionError):
        _ = poly("1 + s") ** -1


def test_unit_inverse_of_signed_monomial() -> None:
    p = poly("-s^2*t^-1")
    assert p.is_unit()
    assert p * p.unit_inverse() == 1


def test_monomial_unit_test() -> None:
    assert monomial_unit_test(poly("-s^2*t^-1")) == (-1, Monomial.from_map({S: 2, T: -1}))
    assert monomial_unit_test(poly("2*s")) is None
    assert monomial_unit_test(poly("1 + s")) is None
    assert monomial_unit_test(LaurentPoly.zero()) is None


def test_exact_div() -> None:
    p = poly("s^2 - t^2")
    assert p.exact_div(poly("s - t")) == poly("s + t")
    assert poly("s^-1 - s").exact_div(poly("1 - s")) == poly("s^-1 + 1")
    with pytest.raises(InexactDivisionError):
        poly("s^2 + 1").exact_div(poly("s + 1"))


def test_exponent_range_and_shift() -> None:
    p = poly("(s^-1*t^-1 - 1)*z^-2 - s^-1*t^-1 + 1")
    assert p.exponent_range(Z) == (0, -2)
    assert p.exponent_range("s") == (0, -1)
    shifted = p.shift_to_min_zero([S, T])
    assert shifted.exponent_range(S) == (1, 0)
    assert shifted.exponent_range(Z) == (0, -2)
    assert LaurentPoly.zero().exponent_range(Z) is None


def test_substitute() -> None:
    p = poly("z^2 + z^-2 - 2")
    assert p.substitute(Z, LaurentPoly.one()) == 0
    assert p.substitute(Z, poly("s")) == poly("s^2 + s^-2 - 2")


def test_domains_do_not_mix() -> None:
    q = LaurentPoly.constant(I, CoefficientDomain.QUATERNION)
    with pytest.raises(DomainMismatchError):
        _ = q + poly("s")


def test_quaternion_products_keep_order() -> None:
    i = LaurentPoly.constant(I, CoefficientDomain.QUATERNION)
    j = LaurentPoly.constant(J, CoefficientDomain.QUATERNION)
    assert i * j == LaurentPoly.constant(K, CoefficientDomain.QUATERNION)
    assert j * i == LaurentPoly.constant(-K, CoefficientDomain.QUATERNION)


def test_parse_quaternion_unit() -> None:
    assert parse_quaternion_unit("-j") == -J
    assert parse_quaternion_unit("k") == K
    with pytest.raises(ValueError):
        parse_quaternion_unit("2i")


def test_gaussian_narrowing() -> None:
    real = LaurentPoly({Monomial.of(Z, 2): gaussian(3, 0)}, CoefficientDomain.GAUSSIAN)
    assert real.narrow() == poly("3*z^2")
    complex_valued = LaurentPoly({Monomial(): gaussian(1, 1)}, CoefficientDomain.GAUSSIAN)
    assert complex_valued.narrow() is complex_valued


@settings(max_examples=60, deadline=None)
@given(laurent_polys(), laurent_polys(), laurent_polys())
def test_ring_laws(a: LaurentPoly, b: LaurentPoly, c: LaurentPoly) -> None:
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0


@settings(max_examples=60, deadline=None)
@given(laurent_polys(), laurent_polys())
def test_exact_div_inverts_multiplication(a: LaurentPoly, b: LaurentPoly) -> None:
    if b.is_zero():
        return
    assert (a * b).exact_div(b) == a


@settings(max_examples=60, deadline=None)
@given(laurent_polys())
def test_printing_round_trips(a: LaurentPoly) -> None:
    assert LaurentPoly.parse(str(a)) == a


@settings(max_examples=60, deadline=None)
@given(monomial_units())
def test_unit_times_inverse_is_one(p: LaurentPoly) -> None:
    one = LaurentPoly.one(p.domain)
    assert p.is_unit()
    assert p * p.unit_inverse() == one
    assert p.unit_inverse() * p == one


def test_gaussian_text_round_trips() -> None:
    p = LaurentPoly.parse("(1 + 2*I)*s - I*t^-1 + 3", CoefficientDomain.GAUSSIAN)
    assert p.coefficient(Monomial.of(S)) == gaussian(1, 2)
    assert p.coefficient(Monomial.of(T, -1)) == gaussian(0, -1)
    assert LaurentPoly.parse(str(p), CoefficientDomain.GAUSSIAN) == p


def test_unreadable_text() -> None:
    for text in ("", "s +", "(s", "x^2", "s/2", "2*I*s"):
        with pytest.raises(ValueError):
            poly(text)


# -- matrices ------------------------------------------------------------------------------------------------------


def test_identity_and_product() -> None:
    m = RingMatrix.from_rows([[0, poly("s")], [poly("t"), poly("1 - s*t")]])
    assert m @ RingMatrix.identity(2) == m
    squared = RingMatrix.from_rows([[poly("s*t"), poly("s - s^2*t")], [poly("t - s*t^2"), poly("1 - s*t + s^2*t^2")]])
    assert mat_mul(m, m) == squared
    with pytest.raises(DimensionError):
        _ = m @ RingMatrix.identity(3)


def test_determinant_needs_square_matrix() -> None:
    with pytest.raises(DimensionError):
        determinant(RingMatrix.zeros(2, 3))


def test_small_determinants() -> None:
    m = RingMatrix.from_rows([[poly("s"), 1], [1, poly("t")]])
    assert determinant(m) == poly("s*t - 1")
    assert bareiss_determinant(m) == poly("s*t - 1")
    assert cofactor_determinant(m) == poly("s*t - 1")
    assert determinant(RingMatrix.zeros(3, 3)) == 0


def test_determinant_paths_agree_on_random_matrices() -> None:
    rng = random.Random(20240611)
    for _ in range(100):
        n = rng.randint(1, 5)
        m = RingMatrix.from_rows([[random_poly(rng) for _ in range(n)] for _ in range(n)])
        expected = cofactor_determinant(m)
        assert bareiss_determinant(m) == expected
        assert determinant(m) == expected


def test_complex_representation_of_quaternions() -> None:
    entry = LaurentPoly.constant(Quaternion(1, 2, 3, 4), CoefficientDomain.QUATERNION)
    q = RingMatrix.from_rows([[entry]], CoefficientDomain.QUATERNION)
    rep = quaternion_to_complex_rep(q)
    assert rep.rows == 2
    assert rep[0, 0].coefficient(Monomial()) == gaussian(1, 2)
    assert rep[0, 1].coefficient(Monomial()) == gaussian(3, 4)
    assert rep[1, 0].coefficient(Monomial()) == gaussian(-3, 4)
    assert rep[1, 1].coefficient(Monomial()) == gaussian(1, -2)
    # the Study determinant of a 1x1 quaternion matrix is its norm
    assert study_determinant(q).narrow() == 30


def test_quaternion_matrices_refuse_plain_determinants() -> None:
    q = RingMatrix.identity(2, CoefficientDomain.QUATERNION)
    with pytest.raises(DomainMismatchError):
        determinant(q)


@settings(max_examples=30, deadline=None)
@given(matrix_pairs(laurent_polys(), CoefficientDomain.INT))
def test_determinant_is_multiplicative(pair: tuple[RingMatrix, RingMatrix]) -> None:
    a, b = pair
    assert determinant(a @ b) == determinant(a) * determinant(b)


@settings(max_examples=30, deadline=None)
@given(matrix_pairs(gaussian_polys(), CoefficientDomain.GAUSSIAN))
def test_gaussian_determinant_is_multiplicative(pair: tuple[RingMatrix, RingMatrix]) -> None:
    a, b = pair
    assert determinant(a @ b) == determinant(a) * determinant(b)


@settings(max_examples=40, deadline=None)
@given(matrix_pairs(gaussian_polys(), CoefficientDomain.GAUSSIAN, max_size=4))
def test_gaussian_determinant_paths_agree(pair: tuple[RingMatrix, RingMatrix]) -> None:
    m, _ = pair
    expected = cofactor_determinant(m)
    assert bareiss_determinant(m) == expected
    assert determinant(m) == expected


@settings(max_examples=40, deadline=None)
@given(matrix_pairs(quaternion_polys(), CoefficientDomain.QUATERNION))
def test_complex_representation_is_multiplicative(pair: tuple[RingMatrix, RingMatrix]) -> None:
    a, b = pair
    assert quaternion_to_complex_rep(a @ b) == quaternion_to_complex_rep(a) @ quaternion_to_complex_rep(b)
    assert study_determinant(a @ b) == study_determinant(a) * study_determinant(b)

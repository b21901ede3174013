from biquandle.ring import LaurentPoly, S, T


def canonicalize(raw: LaurentPoly, wr: int) -> LaurentPoly:
    """(-1)^writhe * raw with the s and t exponents shifted to minimum 0; other variables keep their exponents."""
    signed = raw if wr % 2 == 0 else -raw
    return signed.narrow().shift_to_min_zero([S, T])


def equal_up_to_unit(p: LaurentPoly, q: LaurentPoly) -> bool:
    """Equality up to a global sign and a monomial in s and t"""
    left = p.narrow().shift_to_min_zero([S, T])
    right = q.narrow().shift_to_min_zero([S, T])
    if left.domain is not right.domain:
        return False
    return left == right or left == -right

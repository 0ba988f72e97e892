"""
Specializations of bracket polynomials

q = t^(1/4):  A -> q^-1,  B -> q,  d -> -q^-2 - q^2
"""

from typing import Dict

from apps.polynomial.models import BracketPoly, QuarterLaurent

LOOP_VALUE = QuarterLaurent({-2: -1, 2: -1})


def _loop_powers(top: int) -> Dict[int, QuarterLaurent]:
    powers = {0: QuarterLaurent.ONE}
    for k in range(1, top + 1):
        powers[k] = powers[k - 1] * LOOP_VALUE
    return powers


def specialize_jones(poly: BracketPoly) -> QuarterLaurent:
    """Substitute A = t^(-1/4), B = t^(1/4), d = -(t^(-1/2) + t^(1/2))"""
    if poly.is_zero():
        return QuarterLaurent.ZERO
    loops = _loop_powers(max(k for (_, _, k), _ in poly.terms))
    result = QuarterLaurent.ZERO
    for (a, b, k), coefficient in poly.terms:
        result = result + loops[k].shift(b - a) * coefficient
    return result


def writhe_factor(writhe: int) -> QuarterLaurent:
    """(-A^3)^(-w) at A = t^(-1/4), i.e. (-1)^w t^(3w/4)"""
    return QuarterLaurent.monomial(3 * writhe, -1 if writhe % 2 else 1)


def normalize_writhe(poly: BracketPoly, writhe: int) -> QuarterLaurent:
    return specialize_jones(poly) * writhe_factor(writhe)


def specialize_bracket(poly: BracketPoly) -> QuarterLaurent:
    """
    Substitute B = A^-1, d = -A^2 - A^-2; exponents of the result count
    whole powers of A
    """
    return specialize_jones(poly).mirror()


def substitute_dual(poly: BracketPoly) -> BracketPoly:
    """Swap the roles of A and B"""
    return BracketPoly({(b, a, k): c for (a, b, k), c in poly.terms})

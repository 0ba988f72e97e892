"""
Canonical text and JSON forms of polynomials

Text:
- BracketPoly terms in ascending (a, b, k) order: `B^2 + 2*A*B*d + A^2`
- QuarterLaurent terms in ascending exponent order, exponents as reduced
  fractions over 4: `-t^-4 + t^-3 + t^-1`, `t^(3/4)`
"""

from fractions import Fraction
from typing import Any, Dict, List, Tuple

from apps.core.exceptions import InvariantViolation
from apps.polynomial.models import BracketPoly, QuarterLaurent


def _join(pieces: List[Tuple[int, str]]) -> str:
    """pieces: (coefficient, monomial text with '' for the constant)"""
    if not pieces:
        return '0'
    out = []
    for position, (coefficient, body) in enumerate(pieces):
        magnitude = abs(coefficient)
        if not body:
            text = str(magnitude)
        elif magnitude == 1:
            text = body
        else:
            text = f"{magnitude}*{body}"
        if position == 0:
            out.append(f"-{text}" if coefficient < 0 else text)
        else:
            out.append(f"{'-' if coefficient < 0 else '+'} {text}")
    return ' '.join(out)


def _power(symbol: str, exponent: int) -> str:
    if exponent == 0:
        return ''
    if exponent == 1:
        return symbol
    return f"{symbol}^{exponent}"


def render_bracket(poly: BracketPoly) -> str:
    pieces = []
    for (a, b, k), coefficient in poly.terms:
        factors = [p for p in (_power('A', a), _power('B', b), _power('d', k)) if p]
        pieces.append((coefficient, '*'.join(factors)))
    return _join(pieces)


def _quarter_power(symbol: str, exponent: int) -> str:
    value = Fraction(exponent, 4)
    if value.denominator == 1:
        return _power(symbol, value.numerator)
    return f"{symbol}^({value.numerator}/{value.denominator})"


def render_jones(poly: QuarterLaurent) -> str:
    return _join([(c, _quarter_power('t', e)) for e, c in poly.terms])


def render_in_a(poly: QuarterLaurent) -> str:
    """A Laurent polynomial whose exponents count whole powers of A"""
    return _join([(c, _power('A', e)) for e, c in poly.terms])


def bracket_to_json(poly: BracketPoly) -> Dict[str, Any]:
    return {'terms': [{'A': a, 'B': b, 'd': k, 'c': c} for (a, b, k), c in poly.terms]}


def jones_to_json(poly: QuarterLaurent) -> Dict[str, Any]:
    return {'terms': [{'q4': e, 'c': c} for e, c in poly.terms]}


def in_a_to_json(poly: QuarterLaurent) -> Dict[str, Any]:
    """JSON for render_in_a values: exponents are whole powers of A"""
    return {'terms': [{'A': e, 'c': c} for e, c in poly.terms]}


def bracket_from_json(data: Dict[str, Any]) -> BracketPoly:
    try:
        return BracketPoly({(t['A'], t['B'], t['d']): t['c'] for t in data['terms']})
    except (KeyError, TypeError) as e:
        raise InvariantViolation('bracket json', f"malformed term list: {e}")


def jones_from_json(data: Dict[str, Any]) -> QuarterLaurent:
    try:
        return QuarterLaurent({t['q4']: t['c'] for t in data['terms']})
    except (KeyError, TypeError) as e:
        raise InvariantViolation('jones json', f"malformed term list: {e}")

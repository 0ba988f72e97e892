"""
Exact sparse polynomials with integer coefficients

- BracketPoly: polynomials in commuting A, B, d (non-negative exponents)
- QuarterLaurent: Laurent polynomials in q = t^(1/4)

Both keep their terms as a sorted tuple of (exponent, coefficient) pairs with
no zero coefficients, so equality is exact term-map equality.
"""

from collections import defaultdict
from typing import Dict, Iterable, Mapping, Tuple

from apps.core.exceptions import InvariantViolation


class _SparsePolynomial:
    __slots__ = ('terms',)

    def __init__(self, terms: Mapping = None):
        collected: Dict = defaultdict(int)
        for exponent, coefficient in (terms or {}).items():
            self._check_exponent(exponent)
            collected[exponent] += int(coefficient)
        self.terms = tuple(sorted((e, c) for e, c in collected.items() if c != 0))

    def __setattr__(self, name, value):
        if hasattr(self, 'terms'):
            raise AttributeError(f"{type(self).__name__} is immutable")
        super().__setattr__(name, value)

    @classmethod
    def _check_exponent(cls, exponent):
        raise NotImplementedError

    @classmethod
    def _combine(cls, first, second):
        raise NotImplementedError

    @classmethod
    def _from_pairs(cls, pairs: Iterable[Tuple]):
        collected: Dict = defaultdict(int)
        for exponent, coefficient in pairs:
            collected[exponent] += coefficient
        return cls(collected)

    def as_dict(self) -> Dict:
        return dict(self.terms)

    def coefficient(self, exponent) -> int:
        return dict(self.terms).get(exponent, 0)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.constant(other)
        if type(other) is not type(self):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash((type(self).__name__, self.terms))

    def _coerce(self, other):
        if isinstance(other, int):
            return self.constant(other)
        if type(other) is not type(self):
            return None
        return other

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._from_pairs(self.terms + other.terms)

    __radd__ = __add__

    def __neg__(self):
        return self._from_pairs((e, -c) for e, c in self.terms)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return self._from_pairs((e, c * other) for e, c in self.terms)
        if type(other) is not type(self):
            return NotImplemented
        return self._from_pairs(
            (self._combine(e1, e2), c1 * c2)
            for e1, c1 in self.terms
            for e2, c2 in other.terms
        )

    __rmul__ = __mul__

    def __pow__(self, power: int):
        if power < 0:
            raise ValueError('negative powers are not supported')
        result = self.constant(1)
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def __repr__(self):
        return f"{type(self).__name__}({dict(self.terms)!r})"


class BracketPoly(_SparsePolynomial):
    """
    Sum of c * A^a * B^b * d^k over exponent triples (a, b, k)
    """
    __slots__ = ()

    @classmethod
    def _check_exponent(cls, exponent):
        if len(exponent) != 3 or any(not isinstance(x, int) or x < 0 for x in exponent):
            raise InvariantViolation('bracket exponents', f"bad exponent triple {exponent!r}")

    @classmethod
    def _combine(cls, first, second):
        return (first[0] + second[0], first[1] + second[1], first[2] + second[2])

    @classmethod
    def constant(cls, value: int = 1) -> 'BracketPoly':
        return cls({(0, 0, 0): value})

    @classmethod
    def monomial(cls, a: int = 0, b: int = 0, k: int = 0, coefficient: int = 1) -> 'BracketPoly':
        return cls({(a, b, k): coefficient})

    def shift(self, a: int = 0, b: int = 0, k: int = 0) -> 'BracketPoly':
        """Multiply by A^a B^b d^k"""
        return self._from_pairs(((x + a, y + b, z + k), c) for (x, y, z), c in self.terms)

    def __str__(self):
        from apps.polynomial.rendering import render_bracket
        return render_bracket(self)


class QuarterLaurent(_SparsePolynomial):
    """
    Sum of c * t^(e/4) over integer exponents e (quarter units, t = 4)
    """
    __slots__ = ()

    @classmethod
    def _check_exponent(cls, exponent):
        if not isinstance(exponent, int):
            raise InvariantViolation('laurent exponents', f"bad exponent {exponent!r}")

    @classmethod
    def _combine(cls, first, second):
        return first + second

    @classmethod
    def constant(cls, value: int = 1) -> 'QuarterLaurent':
        return cls({0: value})

    @classmethod
    def monomial(cls, exponent: int = 0, coefficient: int = 1) -> 'QuarterLaurent':
        return cls({exponent: coefficient})

    def shift(self, exponent: int) -> 'QuarterLaurent':
        return self._from_pairs((e + exponent, c) for e, c in self.terms)

    def mirror(self) -> 'QuarterLaurent':
        """t -> 1/t"""
        return self._from_pairs((-e, c) for e, c in self.terms)

    def __str__(self):
        from apps.polynomial.rendering import render_jones
        return render_jones(self)


BracketPoly.ZERO = BracketPoly()
BracketPoly.ONE = BracketPoly.constant(1)
BracketPoly.A = BracketPoly.monomial(a=1)
BracketPoly.B = BracketPoly.monomial(b=1)
BracketPoly.D = BracketPoly.monomial(k=1)

QuarterLaurent.ZERO = QuarterLaurent()
QuarterLaurent.ONE = QuarterLaurent.constant(1)

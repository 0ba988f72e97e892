import pytest
from hypothesis import given, strategies as st

from apps.core.exceptions import InvariantViolation
from apps.polynomial.models import BracketPoly, QuarterLaurent

exponents = st.tuples(*(st.integers(min_value=0, max_value=3),) * 3)
brackets = st.dictionaries(exponents, st.integers(min_value=-5, max_value=5), max_size=4).map(BracketPoly)
laurents = st.dictionaries(st.integers(min_value=-12, max_value=12),
                           st.integers(min_value=-5, max_value=5), max_size=5).map(QuarterLaurent)


class TestBracketPoly:
    def test_zero_coefficients_are_dropped(self):
        poly = BracketPoly({(1, 0, 0): 2, (0, 1, 0): 0})
        assert poly.terms == (((1, 0, 0), 2),)
        assert BracketPoly({(1, 0, 0): 0}).is_zero()

    def test_negative_exponents_are_rejected(self):
        with pytest.raises(InvariantViolation):
            BracketPoly({(-1, 0, 0): 1})

    def test_immutable(self):
        with pytest.raises(AttributeError):
            BracketPoly.ONE.terms = ()

    def test_arithmetic(self):
        A, B, D = BracketPoly.A, BracketPoly.B, BracketPoly.D
        assert (A + B) ** 2 == A * A + 2 * A * B + B * B
        assert (A - A).is_zero()
        assert A * D == BracketPoly.monomial(a=1, k=1)
        assert BracketPoly.ONE == 1

    def test_shift(self):
        assert BracketPoly.B.shift(a=2, k=1) == BracketPoly.monomial(2, 1, 1)

    @given(brackets, brackets, brackets)
    def test_ring_axioms(self, p, q, r):
        assert p + q == q + p
        assert p * q == q * p
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r
        assert p - p == BracketPoly.ZERO
        assert p * BracketPoly.ONE == p

    @given(brackets)
    def test_hash_follows_equality(self, p):
        assert hash(p + BracketPoly.ZERO) == hash(p)


class TestQuarterLaurent:
    def test_mirror(self):
        poly = QuarterLaurent({-4: 1, 2: -3})
        assert poly.mirror() == QuarterLaurent({4: 1, -2: -3})

    def test_types_do_not_mix(self):
        assert QuarterLaurent.ONE != BracketPoly.ONE
        with pytest.raises(TypeError):
            QuarterLaurent.ONE + BracketPoly.ONE

    @given(laurents, laurents)
    def test_mirror_is_a_ring_homomorphism(self, p, q):
        assert (p * q).mirror() == p.mirror() * q.mirror()
        assert (p + q).mirror() == p.mirror() + q.mirror()
        assert p.mirror().mirror() == p

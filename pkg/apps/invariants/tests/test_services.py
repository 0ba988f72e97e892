import pytest

from apps.cmap.services import flip_signs
from apps.cmap.tests.factories import (
    DoubleLoopFactory,
    PlanarLoopFactory,
    RandomGraphFactory,
    TriangleFactory,
    WorkedExampleFactory,
)
from apps.core.exceptions import InvariantViolation, LimitExceededError, NotColorableError
from apps.diagram.moves import switch_crossing
from apps.invariants.services import (
    InvariantReport,
    bracket,
    f_expansion,
    f_recursive,
    invariant_report,
    jones,
    jones_via_f,
    tait_polynomial,
    worked_example,
)
from apps.polynomial.models import BracketPoly
from apps.polynomial.services import substitute_dual

A, B, D = BracketPoly.A, BracketPoly.B, BracketPoly.D


class TestBracket:
    def test_trefoil(self, load_diagram):
        expected = A ** 3 * D ** 2 + 3 * A ** 2 * B * D + 3 * A * B ** 2 + B ** 3 * D
        assert bracket(load_diagram('trefoil.vd')) == expected

    def test_hopf_matches_the_worked_example(self, load_diagram):
        _, value = worked_example()
        assert value == A ** 2 * D + 2 * A * B + B ** 2 * D
        assert bracket(load_diagram('hopf.vd')) == value

    def test_kinks(self, load_diagram):
        assert str(bracket(load_diagram('kink_positive.vd'))) == 'B + A*d'
        assert bracket(load_diagram('kink_negative.vd')) == A + B * D

    def test_unknot(self, load_diagram):
        assert bracket(load_diagram('unknot.vd')) == 1

    def test_limit(self, load_diagram):
        with pytest.raises(LimitExceededError):
            bracket(load_diagram('trefoil.vd'), limit=2)

    def test_jobs_do_not_change_the_result(self, load_diagram):
        diagram = load_diagram('trefoil.vd')
        assert bracket(diagram, jobs=2) == bracket(diagram, jobs=1)


class TestJones:
    @pytest.mark.parametrize('name, text', [
        ('trefoil.vd', '-t^-4 + t^-3 + t^-1'),
        ('trefoil_right.vd', 't + t^3 - t^4'),
        ('hopf.vd', '-t^(-5/2) - t^(-1/2)'),
        ('kink_positive.vd', '1'),
        ('kink_negative.vd', '1'),
        ('unknot.vd', '1'),
        ('virtualized_trefoil.vd', '1'),
    ])
    def test_fixtures(self, load_diagram, name, text):
        assert str(jones(load_diagram(name))) == text

    def test_switching_one_trefoil_crossing_unknots_it(self, load_diagram):
        assert jones(switch_crossing(load_diagram('trefoil.vd'), 2)) == 1

    def test_mirror(self, load_diagram):
        assert jones(load_diagram('trefoil.vd')).mirror() == jones(load_diagram('trefoil_right.vd'))

    def test_reversed_hopf_component(self, load_diagram):
        assert str(jones(load_diagram('hopf.vd'), reverse=[1])) == '-t^(1/2) - t^(5/2)'

    def test_via_tait_graph(self, load_diagram, load_graph):
        for name in ('trefoil.vd', 'hopf.vd', 'kink_negative.vd'):
            diagram = load_diagram(name)
            assert jones_via_f(diagram) == jones(diagram)
        assert jones_via_f(load_graph('triangle.cg')) == jones(load_diagram('trefoil_right.vd'))

    def test_via_tait_graph_follows_the_orientation(self, load_diagram):
        hopf = load_diagram('hopf.vd')
        assert jones_via_f(hopf, reverse=[1]) == jones(hopf, reverse=[1])
        assert str(jones_via_f(hopf, reverse=[1])) == '-t^(1/2) - t^(5/2)'

    def test_tait_polynomial_is_the_bracket(self, load_diagram):
        diagram = load_diagram('trefoil.vd')
        same, poly = tait_polynomial(diagram)
        assert same is diagram
        assert poly == bracket(diagram)

    def test_via_tait_graph_needs_a_coloring(self, load_diagram):
        with pytest.raises(NotColorableError):
            jones_via_f(load_diagram('virtual_trefoil.vd'))

    def test_report(self, load_diagram):
        report = invariant_report(load_diagram('hopf.vd'))
        data = report.to_json()
        assert data['writhe'] == -2
        assert data['states'] == 4
        assert 'ms' not in data
        assert 'ms' in report.to_json(timing=True)
        assert InvariantReport(BracketPoly.ONE, jones(load_diagram('unknot.vd')), 0, 1).to_json(timing=True) == {
            'bracket': {'terms': [{'A': 0, 'B': 0, 'd': 0, 'c': 1}]},
            'jones': {'terms': [{'q4': 0, 'c': 1}]},
            'writhe': 0,
            'states': 1,
        }


class TestGraphPolynomial:
    def test_planar_loop(self):
        assert str(f_expansion(PlanarLoopFactory())) == 'B + A*d'

    def test_interleaved_loops(self):
        assert str(f_expansion(DoubleLoopFactory())) == 'B^2 + 2*A*B*d + A^2'

    def test_worked_example(self):
        graph = WorkedExampleFactory()
        assert f_expansion(graph) == f_recursive(graph) == A ** 2 * D + 2 * A * B + B ** 2 * D

    def test_triangle(self):
        expected = A ** 3 * D + 3 * A ** 2 * B + 3 * A * B ** 2 * D + B ** 3 * D ** 2
        assert f_expansion(TriangleFactory()) == expected
        assert f_recursive(TriangleFactory(), order=[2, 0, 1]) == expected

    def test_recursion_order_must_cover_every_edge(self):
        with pytest.raises(InvariantViolation):
            f_recursive(TriangleFactory(), order=[0, 1])

    def test_limit(self):
        with pytest.raises(LimitExceededError):
            f_expansion(TriangleFactory(), limit=2)
        with pytest.raises(LimitExceededError):
            f_recursive(TriangleFactory(), limit=2)

    def test_sign_flip_swaps_a_and_b(self):
        for _ in range(10):
            graph = RandomGraphFactory(edge_count=5)
            assert f_expansion(flip_signs(graph)) == substitute_dual(f_expansion(graph))

import pytest

from apps.cli.parsers import parse_diagram_file, parse_diagram_text, parse_graph_file, parse_graph_text
from apps.cmap.tests.factories import DoubleLoopFactory, PlanarLoopFactory
from apps.core.exceptions import FileValidationError, FormatError, InvariantViolation


class TestGraphParser:
    def test_planar_loop(self):
        graph = parse_graph_text('v 0: 0 1\ne 0: 0 1 +\n')
        assert graph == PlanarLoopFactory()
        assert graph.dart_count == 2

    def test_comments_and_blank_lines(self):
        text = '# interleaved\n\nv 0: 0 1 2 3   # one vertex\ne 0: 0 2 +\ne 1: 1 3 +\n'
        assert parse_graph_text(text) == DoubleLoopFactory()

    def test_isolated_vertex(self):
        graph = parse_graph_text('v 0:\nv 1: 0 1\ne 0: 1 0 -\n')
        assert graph.vertices == ((0, 1), ())

    def test_fixture_file(self, fixture_path):
        assert parse_graph_file(fixture_path('triangle.cg')).edge_count == 3

    def test_dart_paired_to_itself(self):
        with pytest.raises(InvariantViolation) as excinfo:
            parse_graph_text('v 0: 0 1\ne 0: 0 0 +\n')
        assert 'line 2' in excinfo.value.detail

    def test_bad_sign(self):
        with pytest.raises(FormatError) as excinfo:
            parse_graph_text('v 0: 0 1\ne 0: 0 1 x\n')
        assert (excinfo.value.line, excinfo.value.column) == (2, 10)

    def test_unknown_record(self):
        with pytest.raises(FormatError) as excinfo:
            parse_graph_text('  q 0: 1\n')
        assert (excinfo.value.line, excinfo.value.column) == (1, 3)

    def test_bad_record_id(self):
        with pytest.raises(FormatError, match="expected '<id>:'"):
            parse_graph_text('v x: 0 1\n')

    def test_non_numeric_dart(self):
        with pytest.raises(FormatError, match='dart id'):
            parse_graph_text('v 0: 0 a\n')

    def test_duplicate_vertex(self):
        with pytest.raises(InvariantViolation, match='vertex ids unique'):
            parse_graph_text('v 0: 0\nv 0: 1\ne 0: 0 1 +\n')

    def test_edge_arity(self):
        with pytest.raises(FormatError, match='two darts and a sign'):
            parse_graph_text('v 0: 0 1\ne 0: 0 1\n')

    def test_empty(self):
        with pytest.raises(FormatError, match='no vertices'):
            parse_graph_text('# nothing\n')

    def test_wrong_extension(self, fixture_path):
        with pytest.raises(FileValidationError):
            parse_graph_file(fixture_path('trefoil.vd'))


class TestDiagramParser:
    def test_trefoil(self, fixture_path):
        diagram = parse_diagram_file(fixture_path('trefoil.vd'))
        assert diagram.crossing_count == 3
        assert diagram.component_count == 1

    def test_labels_are_names(self):
        first = parse_diagram_text('x 0: a b b a\n')
        second = parse_diagram_text('x 0: 7 3 3 7\n')
        assert first == second

    def test_crossings_sorted_by_id(self):
        shuffled = parse_diagram_text('x 5: 3 2 1 0\nx 2: 0 1 2 3\n')
        assert shuffled.mate == parse_diagram_text('x 0: 0 1 2 3\nx 1: 3 2 1 0\n').mate

    def test_free_loops(self):
        diagram = parse_diagram_text('o 2\n')
        assert (diagram.crossing_count, diagram.free_loops) == (0, 2)
        with pytest.raises(FormatError, match='given twice'):
            parse_diagram_text('o 1\no 1\n')

    def test_label_used_once(self):
        with pytest.raises(InvariantViolation, match='exactly twice'):
            parse_diagram_text('x 0: 0 1 2 3\n')

    def test_three_labels(self):
        with pytest.raises(FormatError, match='4 arc labels'):
            parse_diagram_text('x 0: 0 0 1\n')

    def test_bad_label(self):
        with pytest.raises(FormatError) as excinfo:
            parse_diagram_text('x 0: 0 0 1 1-\n')
        assert excinfo.value.column == 12

    def test_duplicate_crossing(self):
        with pytest.raises(InvariantViolation, match='crossing ids unique'):
            parse_diagram_text('x 0: 0 0 1 1\nx 0: 2 2 3 3\n')

    def test_empty(self):
        with pytest.raises(FormatError):
            parse_diagram_text('')

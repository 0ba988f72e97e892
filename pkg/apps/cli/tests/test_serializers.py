import pytest

from apps.cli.parsers import parse_diagram_text, parse_graph_text
from apps.cli.serializers import (
    arc_labels,
    coloring_to_json,
    diagram_to_json,
    graph_to_json,
    medial_map_to_json,
    serialize_coloring,
    serialize_diagram,
    serialize_graph,
    serialize_medial_map,
)
from apps.cmap.services import canonical, is_equivalent
from apps.cmap.tests.factories import TriangleFactory, WorkedExampleFactory
from apps.diagram.services import checkerboard_colorable, faces
from apps.medial.construction import medial


@pytest.mark.parametrize('name', ['triangle.cg', 'loop_positive.cg', 'double_loop.cg'])
def test_graph_fixtures_reparse(load_graph, name):
    graph = load_graph(name)
    reparsed = parse_graph_text(serialize_graph(graph))
    assert reparsed == canonical(graph)
    assert is_equivalent(reparsed, graph)
    assert serialize_graph(reparsed) == serialize_graph(graph)


@pytest.mark.parametrize('name', [
    'trefoil.vd', 'trefoil_right.vd', 'hopf.vd', 'kink_positive.vd', 'kink_negative.vd',
    'virtual_trefoil.vd', 'virtualized_trefoil.vd', 'unknot.vd',
])
def test_diagram_fixtures_reparse(load_diagram, name):
    diagram = load_diagram(name)
    assert parse_diagram_text(serialize_diagram(diagram)) == diagram


def test_graph_text():
    assert serialize_graph(WorkedExampleFactory()) == 'v 0: 0 1 2 3\ne 0: 0 2 +\ne 1: 1 3 -\n'


def test_graph_json():
    assert graph_to_json(WorkedExampleFactory()) == {
        'vertices': [[0, 1, 2, 3]],
        'edges': [{'id': 0, 'darts': [0, 2], 'sign': '+'}, {'id': 1, 'darts': [1, 3], 'sign': '-'}],
    }


def test_sparse_ids_are_written_densely():
    graph = parse_graph_text('v 0: 10 12\nv 1: 11 13\ne 5: 10 11 +\ne 7: 12 13 -\n')
    assert serialize_graph(graph) == 'v 0: 0 1\nv 1: 2 3\ne 0: 0 2 +\ne 1: 1 3 -\n'
    assert graph_to_json(graph)['edges'] == [
        {'id': 0, 'darts': [0, 2], 'sign': '+'},
        {'id': 1, 'darts': [1, 3], 'sign': '-'},
    ]


def test_diagram_text_uses_first_port_labels(load_diagram):
    diagram = load_diagram('hopf.vd')
    assert arc_labels(diagram) == [0, 1, 2, 3, 3, 2, 1, 0]
    assert serialize_diagram(diagram) == 'x 0: 0 1 2 3\nx 1: 3 2 1 0\n'
    assert diagram_to_json(diagram) == {'crossings': [[0, 1, 2, 3], [3, 2, 1, 0]], 'free_loops': 0}


def test_medial_output_is_a_diagram_file():
    diagram, mapping = medial(TriangleFactory())
    text = serialize_medial_map(mapping) + serialize_diagram(diagram)
    assert text.splitlines()[0] == '# crossing 0: edge 0, vertex-parallel B, edge-parallel A'
    assert parse_diagram_text(text) == diagram
    assert medial_map_to_json(mapping)[2] == {
        'crossing': 2, 'edge': 2, 'vertex_parallel': 'B', 'edge_parallel': 'A',
    }


def test_coloring(load_diagram):
    diagram = load_diagram('kink_positive.vd')
    structure = faces(diagram)
    coloring = checkerboard_colorable(diagram)
    assert serialize_coloring(structure, coloring) == (
        'faces 3\ngenus 0\nface 0 black: 0 2\nface 1 white: 1\nface 2 white: 3\n'
    )
    data = coloring_to_json(structure, coloring.complement())
    assert data['faces'][0] == {'ports': [0, 2], 'color': 'white'}


def test_free_loop_faces_are_named():
    diagram = parse_diagram_text('o 1\n')
    text = serialize_coloring(faces(diagram), checkerboard_colorable(diagram))
    assert text.splitlines()[2:] == ['face 0 black: free loop 0 inside', 'face 1 white: free loop 0 outside']

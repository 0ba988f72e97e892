import pytest

from apps.cmap.generators import enumerate_cyclic_graphs
from apps.cmap.models import NEGATIVE, make_graph
from apps.cmap.services import boundary_components
from apps.cmap.tests.factories import DoubleLoopFactory, PlanarLoopFactory, TriangleFactory
from apps.core.exceptions import UnknownEdgeError
from apps.diagram.services import checkerboard_colorable, loop_count
from apps.medial.construction import medial, medial_diagram, medial_state


class TestMedial:
    def test_triangle_gives_the_right_handed_trefoil(self, load_diagram):
        diagram, mapping = medial(TriangleFactory())
        assert diagram == load_diagram('trefoil_right.vd')
        assert mapping.crossing_edges == (0, 1, 2)
        assert mapping.vertex_parallel == ('B', 'B', 'B')
        assert mapping.edge_parallel == ('A', 'A', 'A')

    def test_loops_give_the_kinks(self, load_diagram):
        assert medial_diagram(PlanarLoopFactory()) == load_diagram('kink_positive.vd')
        assert medial_diagram(PlanarLoopFactory(sign=NEGATIVE)) == load_diagram('kink_negative.vd')

    def test_unchecked_build_is_the_same_diagram(self):
        graph = TriangleFactory()
        assert medial_diagram(graph, check=False) == medial_diagram(graph)

    def test_isolated_vertices_become_free_loops(self):
        diagram = medial_diagram(make_graph([(0, 1), ()], [(0, 0, 1, None)]))
        assert diagram.crossing_count == 1
        assert diagram.free_loops == 1
        assert medial_diagram(make_graph([()], [])).free_loops == 1

    def test_crossings_follow_ascending_edge_ids(self):
        graph = make_graph([(0, 1, 2, 3)], [(7, 0, 2, None), (3, 1, 3, NEGATIVE)])
        _, mapping = medial(graph)
        assert mapping.crossing_edges == (3, 7)
        assert mapping.crossing(7) == 1
        assert mapping.vertex_parallel == ('A', 'B')
        with pytest.raises(UnknownEdgeError):
            mapping.crossing(4)

    def test_medial_state(self):
        _, mapping = medial(TriangleFactory())
        assert str(medial_state(mapping, [0])) == 'ABB'
        assert medial_state(mapping, []) == mapping.vertex_parallel_state()
        with pytest.raises(UnknownEdgeError):
            medial_state(mapping, [5])

    def test_state_loops_are_boundary_components(self):
        graph = DoubleLoopFactory()
        diagram, mapping = medial(graph)
        for subset in ([], [0], [1], [0, 1]):
            assert loop_count(diagram, medial_state(mapping, subset)) == boundary_components(graph, subset)


def _assert_anchors(graph):
    diagram, mapping = medial(graph, check=False)
    assert checkerboard_colorable(diagram) is not None
    assert loop_count(diagram, mapping.vertex_parallel_state()) == graph.vertex_count
    assert loop_count(diagram, mapping.edge_parallel_state()) == boundary_components(graph)


def test_medial_diagrams_are_colorable():
    for graph in enumerate_cyclic_graphs(3, 3):
        _assert_anchors(graph)


@pytest.mark.slow
def test_medial_diagrams_are_colorable_up_to_four_edges():
    for graph in enumerate_cyclic_graphs(4, 3, min_edges=4):
        _assert_anchors(graph)

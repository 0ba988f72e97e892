"""
Medial construction: signed cyclic graph -> virtual diagram

Every edge becomes one crossing (crossing i for the i-th edge in ascending
id order). Each dart h owns two ports at its edge's crossing:
- P(h, +) facing the corner between h and sigma(h)
- P(h, -) facing the corner between sigma^-1(h) and h
and an arc joins P(h, +) to P(sigma(h), -).

Port order at the crossing of edge (h1, h2):
- positive edge: P(h2,-) P(h1,+) P(h1,-) P(h2,+)  (B runs along the vertices)
- negative edge: P(h1,+) P(h1,-) P(h2,+) P(h2,-)  (A runs along the vertices)
Isolated vertices become free loops.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Iterable, Tuple, Union

from apps.core.exceptions import InvariantViolation, UnknownEdgeError
from apps.cmap.models import POSITIVE, EdgeSubset, SignedCyclicGraph
from apps.cmap.services import boundary_components
from apps.diagram.models import SMOOTHING_A, SMOOTHING_B, State, VirtualDiagram, port
from apps.diagram.services import loop_count

logger = logging.getLogger(__name__)

PLUS = '+'
MINUS = '-'


@dataclass(frozen=True)
class MedialMap:
    """
    Edge <-> crossing bijection with the smoothing that runs along the
    vertices (vertex-parallel) at each crossing; the other one runs along
    the edge (edge-parallel)
    """
    crossing_edges: Tuple[int, ...]
    vertex_parallel: Tuple[str, ...]

    def crossing(self, edge_id: int) -> int:
        try:
            return self.crossing_edges.index(edge_id)
        except ValueError:
            raise UnknownEdgeError(edge_id)

    def edge(self, crossing: int) -> int:
        return self.crossing_edges[crossing]

    @property
    def edge_parallel(self) -> Tuple[str, ...]:
        return tuple(SMOOTHING_A if s == SMOOTHING_B else SMOOTHING_B for s in self.vertex_parallel)

    def vertex_parallel_state(self) -> State:
        return State(self.vertex_parallel)

    def edge_parallel_state(self) -> State:
        return State(self.edge_parallel)


def medial_state(mapping: MedialMap, subset: Union[EdgeSubset, Iterable[int]]) -> State:
    """State of the medial diagram for a spanning subgraph: S-edges run edge-parallel"""
    chosen = set(subset)
    for edge_id in chosen:
        mapping.crossing(edge_id)
    return State(tuple(
        edge_side if edge_id in chosen else vertex_side
        for edge_id, vertex_side, edge_side in zip(mapping.crossing_edges, mapping.vertex_parallel,
                                                  mapping.edge_parallel)
    ))


def _port_table(graph: SignedCyclicGraph) -> Dict[Tuple[int, str], int]:
    table = {}
    for crossing, edge in enumerate(graph.edges):
        h1, h2 = edge.darts
        if edge.sign == POSITIVE:
            layout = [(h2, MINUS), (h1, PLUS), (h1, MINUS), (h2, PLUS)]
        else:
            layout = [(h1, PLUS), (h1, MINUS), (h2, PLUS), (h2, MINUS)]
        for offset, key in enumerate(layout):
            table[key] = port(crossing, offset)
    return table


def medial(graph: SignedCyclicGraph, check: bool = True) -> Tuple[VirtualDiagram, MedialMap]:
    """
    Medial diagram D_G and its edge/crossing map

    With check set, the vertex-parallel state must close up into one loop per
    vertex and the edge-parallel state into one loop per boundary component.
    """
    table = _port_table(graph)
    sigma = graph.rotation()
    arcs = [(table[(h, PLUS)], table[(sigma[h], MINUS)]) for h in graph.darts()]
    isolated = sum(1 for cycle in graph.vertices if not cycle)

    diagram = VirtualDiagram.from_arcs(graph.edge_count, arcs, isolated)
    mapping = MedialMap(
        crossing_edges=graph.edge_ids(),
        vertex_parallel=tuple(SMOOTHING_B if e.sign == POSITIVE else SMOOTHING_A for e in graph.edges),
    )

    if check:
        vertex_loops = loop_count(diagram, mapping.vertex_parallel_state())
        if vertex_loops != graph.vertex_count:
            raise InvariantViolation(
                'vertex-parallel loops', f"{vertex_loops} loops for {graph.vertex_count} vertices"
            )
        edge_loops = loop_count(diagram, mapping.edge_parallel_state())
        bc = boundary_components(graph)
        if edge_loops != bc:
            raise InvariantViolation('edge-parallel loops', f"{edge_loops} loops for {bc} boundary components")

    return diagram, mapping


def medial_diagram(graph: SignedCyclicGraph, check: bool = True) -> VirtualDiagram:
    return medial(graph, check=check)[0]

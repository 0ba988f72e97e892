"""
Tait graph extraction from checkerboard-colored diagrams

Vertices are the black faces. Crossing c gives edge c whose two darts sit at
the black corners of c. If the black corners are at elements 0 and 2 (the
corners 3-0 and 1-2) the edge is positive, otherwise negative. A vertex's
rotation is the reverse of the order in which its face walk meets the
corners. Each free loop gives one isolated black vertex.
"""

import logging
from typing import List, Optional, Tuple

from apps.core.exceptions import InvalidColoringError
from apps.cmap.models import NEGATIVE, POSITIVE, Edge, SignedCyclicGraph
from apps.diagram.models import Coloring, VirtualDiagram, crossing_of, offset_of, port
from apps.diagram.services import checkerboard_colorable, validate_coloring

logger = logging.getLogger(__name__)

BLACK = 0


def _corner_dart(p: int, sign: int) -> int:
    """Dart id for the black corner at element p"""
    offset = offset_of(p)
    first = 0 if sign == POSITIVE else 1
    return 2 * crossing_of(p) + (0 if offset == first else 1)


def tait_graph(diagram: VirtualDiagram, coloring: Coloring) -> SignedCyclicGraph:
    structure = validate_coloring(diagram, coloring)
    colors = coloring.colors

    signs = []
    for crossing in range(diagram.crossing_count):
        if colors[structure.face_of[port(crossing, 0)]] == BLACK:
            signs.append(POSITIVE)
        else:
            signs.append(NEGATIVE)

    vertices: List[Tuple[int, ...]] = []
    for index, orbit in enumerate(structure.faces):
        if colors[index] != BLACK:
            continue
        darts = [_corner_dart(p, signs[crossing_of(p)]) for p in orbit]
        vertices.append(tuple(reversed(darts)))

    first_loop_face = len(structure.faces)
    for loop in range(diagram.free_loops):
        inner = first_loop_face + 2 * loop
        if BLACK not in (colors[inner], colors[inner + 1]):
            raise InvalidColoringError(f"free loop {loop} has no black face")
        vertices.append(())

    edges = tuple(Edge(c, (2 * c, 2 * c + 1), signs[c]) for c in range(diagram.crossing_count))
    return SignedCyclicGraph(vertices=tuple(vertices), edges=edges)


def graphical_certificate(diagram: VirtualDiagram) -> Optional[SignedCyclicGraph]:
    """Tait graph for the canonical coloring, or None when the diagram is not colorable"""
    coloring = checkerboard_colorable(diagram)
    if coloring is None:
        return None
    return tait_graph(diagram, coloring)

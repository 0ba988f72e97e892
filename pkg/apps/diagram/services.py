"""
Diagram services

- Component tracing and orientation (lowest-port rule) with writhe
- Loop counts of smoothed states
- Faces of the Carter surface and checkerboard colorings
"""

import logging
from typing import Dict, Iterable, List, Optional, Tuple

import networkx as nx

from apps.core.exceptions import InvalidColoringError, InvariantViolation
from apps.diagram.models import (
    SMOOTHING_PAIRS,
    Coloring,
    FaceStructure,
    Orientation,
    State,
    VirtualDiagram,
    crossing_of,
    port,
    through,
)

logger = logging.getLogger(__name__)

Component = Tuple[Tuple[int, int], ...]


# ======================================================================
# Components and orientation
# ======================================================================

def trace_components(diagram: VirtualDiagram) -> List[Component]:
    """
    Closed strands through the crossings, as sequences of (in port, out port)
    pairs. Each component starts by entering at its lowest port; components
    are ordered by that port. Free loops are not listed.
    """
    visited = set()
    components = []
    for start in range(diagram.port_count):
        if start in visited:
            continue
        steps = []
        entry = start
        while entry not in visited:
            exit_port = through(entry)
            visited.update((entry, exit_port))
            steps.append((entry, exit_port))
            entry = diagram.mate[exit_port]
        components.append(tuple(steps))
    return components


def orient(diagram: VirtualDiagram, reverse: Iterable[int] = ()) -> Orientation:
    """
    Orientation entering each component at its lowest port; component
    indices in reverse are traversed the other way
    """
    components = trace_components(diagram)
    flipped = set(reverse)
    for index in flipped:
        if not 0 <= index < len(components):
            raise InvariantViolation('orientation override', f"no component {index}")
    entries = set()
    for index, steps in enumerate(components):
        side = 1 if index in flipped else 0
        entries.update(step[side] for step in steps)
    return Orientation(
        reversed=tuple(i in flipped for i in range(len(components))),
        entries=frozenset(entries),
    )


def crossing_sign(diagram: VirtualDiagram, orientation: Orientation, crossing: int) -> int:
    under_in = 0 if port(crossing, 0) in orientation.entries else 2
    over_in = 1 if port(crossing, 1) in orientation.entries else 3
    return 1 if over_in == (under_in + 3) % 4 else -1


def writhe(diagram: VirtualDiagram, orientation: Optional[Orientation] = None) -> int:
    if orientation is None:
        orientation = orient(diagram)
    return sum(crossing_sign(diagram, orientation, c) for c in range(diagram.crossing_count))


# ======================================================================
# States
# ======================================================================

def smoothing_partners(diagram: VirtualDiagram, state: State) -> List[int]:
    state.check(diagram)
    partner = [0] * diagram.port_count
    for crossing, choice in enumerate(state.choices):
        for first, second in SMOOTHING_PAIRS[choice]:
            partner[port(crossing, first)] = port(crossing, second)
            partner[port(crossing, second)] = port(crossing, first)
    return partner


def loop_count(diagram: VirtualDiagram, state: State) -> int:
    """Closed curves after smoothing every crossing, free loops included"""
    partner = smoothing_partners(diagram, state)
    visited = [False] * diagram.port_count
    loops = diagram.free_loops
    for start in range(diagram.port_count):
        if visited[start]:
            continue
        loops += 1
        p = start
        while not visited[p]:
            visited[p] = True
            q = diagram.mate[p]
            visited[q] = True
            p = partner[q]
    return loops


# ======================================================================
# Faces and checkerboard colorings
# ======================================================================

def _surface_components(diagram: VirtualDiagram) -> int:
    graph = nx.Graph()
    graph.add_nodes_from(range(diagram.crossing_count))
    graph.add_edges_from((crossing_of(p), crossing_of(q)) for p, q in diagram.arcs())
    return nx.number_connected_components(graph) + diagram.free_loops


def faces(diagram: VirtualDiagram) -> FaceStructure:
    """
    Orbits of the corner walk p -> next port counterclockwise after mate(p)
    """
    face_of = [-1] * diagram.port_count
    orbits = []
    for start in range(diagram.port_count):
        if face_of[start] != -1:
            continue
        orbit = []
        p = start
        while face_of[p] == -1:
            face_of[p] = len(orbits)
            orbit.append(p)
            q = diagram.mate[p]
            p = q - q % 4 + (q + 1) % 4
        orbits.append(tuple(orbit))
    return FaceStructure(
        faces=tuple(orbits),
        face_of=tuple(face_of),
        free_loop_faces=2 * diagram.free_loops,
        surface_components=_surface_components(diagram),
        crossing_count=diagram.crossing_count,
    )


def face_adjacency(diagram: VirtualDiagram, structure: Optional[FaceStructure] = None) -> nx.MultiGraph:
    """Face graph with one edge per arc (keyed by its low port) and per free loop"""
    if structure is None:
        structure = faces(diagram)
    graph = nx.MultiGraph()
    graph.add_nodes_from(range(structure.face_count))
    for p, q in diagram.arcs():
        graph.add_edge(structure.face_of[p], structure.face_of[q], key=p)
    first_loop_face = len(structure.faces)
    for loop in range(diagram.free_loops):
        inner = first_loop_face + 2 * loop
        graph.add_edge(inner, inner + 1, key=f"loop{loop}")
    return graph


def checkerboard_colorable(diagram: VirtualDiagram) -> Optional[Coloring]:
    """
    Proper 2-coloring of the faces, or None. In each connected piece the face
    holding the piece's lowest port (or the inner face of a free loop) is
    black (0).
    """
    structure = faces(diagram)
    graph = face_adjacency(diagram, structure)
    if nx.number_of_selfloops(graph) or not nx.is_bipartite(graph):
        logger.debug(f"Diagram with {diagram.crossing_count} crossings is not checkerboard colorable")
        return None

    colors: Dict[int, int] = {}
    for piece in sorted(nx.connected_components(graph), key=min):
        root = min(piece)
        colors[root] = 0
        for parent, child in nx.bfs_edges(graph, root):
            colors[child] = 1 - colors[parent]
    return Coloring(tuple(colors[i] for i in range(structure.face_count)))


def validate_coloring(diagram: VirtualDiagram, coloring: Coloring,
                      structure: Optional[FaceStructure] = None) -> FaceStructure:
    if structure is None:
        structure = faces(diagram)
    if len(coloring.colors) != structure.face_count:
        raise InvalidColoringError(
            f"coloring has {len(coloring.colors)} entries for {structure.face_count} faces"
        )
    for u, v, key in face_adjacency(diagram, structure).edges(keys=True):
        if coloring.colors[u] == coloring.colors[v]:
            raise InvalidColoringError(f"faces {u} and {v} share a color across arc {key}")
    return structure

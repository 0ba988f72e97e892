"""
Diagram moves

Each move returns a new diagram; crossing ids are kept. Port relabelings at
one crossing are applied as new_mate = pi . mate . pi.
"""

import logging
from typing import Dict, Iterable, List, Tuple

from apps.core.exceptions import SameArcError, UnknownArcError
from apps.diagram.models import VirtualDiagram, port

logger = logging.getLogger(__name__)

# offset permutations applied at one crossing
SWITCH = {0: 3, 1: 0, 2: 1, 3: 2}       # old port k+1 becomes new port k
VIRTUALIZE = {0: 0, 1: 3, 2: 2, 3: 1}   # reflection through the over-strand
FLANK = {0: 1, 1: 0, 2: 3, 3: 2}        # exchange attachments 0<->1 and 2<->3


def _relabel(diagram: VirtualDiagram, crossing: int, offsets: Dict[int, int]) -> VirtualDiagram:
    diagram.check_crossing(crossing)
    rename = list(range(diagram.port_count))
    for old, new in offsets.items():
        rename[port(crossing, old)] = port(crossing, new)
    mate = [0] * diagram.port_count
    for p, q in enumerate(diagram.mate):
        mate[rename[p]] = rename[q]
    return VirtualDiagram(tuple(mate), diagram.free_loops)


def switch_crossing(diagram: VirtualDiagram, crossing: int) -> VirtualDiagram:
    """Exchange over and under at one crossing, keeping the ccw port order"""
    return _relabel(diagram, crossing, SWITCH)


def virtualize(diagram: VirtualDiagram, crossing: int) -> VirtualDiagram:
    """
    Flank a crossing by two virtual crossings and switch it

    Abstractly this is the mirror reflection of the crossing that keeps its
    over-strand: the arcs at ports 1 and 3 trade places. The bracket of the
    result equals the bracket of switch_crossing at the same crossing.
    """
    return _relabel(diagram, crossing, VIRTUALIZE)


def flank_crossing(diagram: VirtualDiagram, crossing: int) -> VirtualDiagram:
    """Flank only: arcs at ports 0/1 and at ports 2/3 trade places (bracket unchanged)"""
    return _relabel(diagram, crossing, FLANK)


def unknotting_virtualization(diagram: VirtualDiagram, crossings: Iterable[int]) -> VirtualDiagram:
    """Virtualize every crossing of a set whose switch unknots the diagram"""
    result = diagram
    for crossing in sorted(set(crossings)):
        result = virtualize(result, crossing)
    return result


def _arc_endpoints(diagram: VirtualDiagram, index: int):
    """(low port, high port) for a real arc, None for a free loop"""
    arcs = diagram.arcs()
    if 0 <= index < len(arcs):
        return arcs[index]
    if len(arcs) <= index < len(arcs) + diagram.free_loops:
        return None
    raise UnknownArcError(index)


def r2_insert(diagram: VirtualDiagram, arc_x: int, arc_y: int) -> VirtualDiagram:
    """
    Clasp arc_x over arc_y with two new crossings X and Y

    Arcs are indexed with real arcs first (ordered by low port), then free
    loops. Strand x runs tail -> X3 -> X1 -> Y1 -> Y3 -> head (over at both),
    strand y runs tail -> X0 -> X2 -> Y0 -> Y2 -> head (under at both).
    A at X with B at Y gives back the original arcs. Naming one free loop
    twice cuts it at two points.
    """
    x_ends = _arc_endpoints(diagram, arc_x)
    y_ends = _arc_endpoints(diagram, arc_y)
    if arc_x == arc_y and x_ends is not None:
        raise SameArcError(f"arc {arc_x} cannot clasp itself")

    n = diagram.crossing_count
    X = [port(n, k) for k in range(4)]
    Y = [port(n + 1, k) for k in range(4)]

    arcs: List[Tuple[int, int]] = [
        (p, q) for p, q in diagram.arcs() if (p, q) not in (x_ends, y_ends)
    ]
    arcs += [(X[1], Y[1]), (X[2], Y[0])]
    free_loops = diagram.free_loops

    if arc_x == arc_y:
        arcs += [(Y[2], X[3]), (Y[3], X[0])]
        free_loops -= 1
    else:
        if x_ends is None:
            arcs.append((Y[3], X[3]))
            free_loops -= 1
        else:
            arcs += [(x_ends[0], X[3]), (Y[3], x_ends[1])]
        if y_ends is None:
            arcs.append((Y[2], X[0]))
            free_loops -= 1
        else:
            arcs += [(y_ends[0], X[0]), (Y[2], y_ends[1])]

    logger.debug(f"R2 clasp of arc {arc_x} over arc {arc_y} adds crossings {n} and {n + 1}")
    return VirtualDiagram.from_arcs(n + 2, arcs, free_loops)

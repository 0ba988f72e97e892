"""
Exhaustive enumeration of small abstract diagrams
"""

from typing import Iterator

from apps.cmap.generators import perfect_matchings
from apps.diagram.models import VirtualDiagram


def enumerate_diagrams(max_crossings: int, min_crossings: int = 1) -> Iterator[VirtualDiagram]:
    """
    Every perfect matching on the ports of n crossings, for n from
    min_crossings to max_crossings; (4n - 1)!! diagrams per n
    """
    for crossing_count in range(min_crossings, max_crossings + 1):
        if crossing_count == 0:
            yield VirtualDiagram.unknot()
            continue
        for arcs in perfect_matchings(list(range(4 * crossing_count))):
            yield VirtualDiagram.from_arcs(crossing_count, arcs)

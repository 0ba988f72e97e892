"""
Text and JSON forms of signed cyclic graphs

Both forms write canonical(graph): darts numbered 0.. in vertex order and
edges numbered 0.. by their smallest dart, so equal rotation systems with
different ids serialize identically.
"""

from typing import Any, Dict

from apps.cmap.models import SignedCyclicGraph
from apps.cmap.services import canonical


def serialize_graph(graph: SignedCyclicGraph) -> str:
    graph = canonical(graph)
    lines = []
    for index, cycle in enumerate(graph.vertices):
        darts = ' '.join(str(d) for d in cycle)
        lines.append(f"v {index}: {darts}".rstrip())
    for edge in graph.edges:
        lines.append(f"e {edge.id}: {edge.darts[0]} {edge.darts[1]} {edge.sign_symbol}")
    return '\n'.join(lines) + '\n'


def graph_to_json(graph: SignedCyclicGraph) -> Dict[str, Any]:
    graph = canonical(graph)
    return {
        'vertices': [list(cycle) for cycle in graph.vertices],
        'edges': [
            {'id': edge.id, 'darts': list(edge.darts), 'sign': edge.sign_symbol}
            for edge in graph.edges
        ],
    }

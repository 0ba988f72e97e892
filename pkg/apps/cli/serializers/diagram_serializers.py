"""
Text and JSON forms of diagrams, colorings and medial maps

Arc labels are assigned 0, 1, ... in order of each arc's lowest port.
"""

from typing import Any, Dict, List

from apps.diagram.models import Coloring, FaceStructure, VirtualDiagram, port
from apps.medial.construction import MedialMap


def arc_labels(diagram: VirtualDiagram) -> List[int]:
    """label[p] for every port p"""
    labels = [0] * diagram.port_count
    for index, (first, second) in enumerate(diagram.arcs()):
        labels[first] = labels[second] = index
    return labels


def serialize_diagram(diagram: VirtualDiagram) -> str:
    labels = arc_labels(diagram)
    lines = []
    for crossing in range(diagram.crossing_count):
        row = ' '.join(str(labels[port(crossing, k)]) for k in range(4))
        lines.append(f"x {crossing}: {row}")
    if diagram.free_loops:
        lines.append(f"o {diagram.free_loops}")
    return '\n'.join(lines) + '\n'


def diagram_to_json(diagram: VirtualDiagram) -> Dict[str, Any]:
    labels = arc_labels(diagram)
    return {
        'crossings': [
            [labels[port(c, k)] for k in range(4)] for c in range(diagram.crossing_count)
        ],
        'free_loops': diagram.free_loops,
    }


def serialize_medial_map(mapping: MedialMap) -> str:
    """Comment lines, so a medial diagram file stays parseable"""
    lines = [
        f"# crossing {c}: edge {edge_id}, vertex-parallel {vertex_side}, edge-parallel {edge_side}"
        for c, (edge_id, vertex_side, edge_side) in enumerate(
            zip(mapping.crossing_edges, mapping.vertex_parallel, mapping.edge_parallel)
        )
    ]
    return '\n'.join(lines) + ('\n' if lines else '')


def medial_map_to_json(mapping: MedialMap) -> List[Dict[str, Any]]:
    return [
        {'crossing': c, 'edge': edge_id, 'vertex_parallel': vertex_side, 'edge_parallel': edge_side}
        for c, (edge_id, vertex_side, edge_side) in enumerate(
            zip(mapping.crossing_edges, mapping.vertex_parallel, mapping.edge_parallel)
        )
    ]


def _face_names(structure: FaceStructure) -> List[str]:
    names = [' '.join(str(p) for p in orbit) for orbit in structure.faces]
    for loop in range(structure.free_loop_faces // 2):
        names += [f"free loop {loop} inside", f"free loop {loop} outside"]
    return names


def serialize_coloring(structure: FaceStructure, coloring: Coloring) -> str:
    lines = [f"faces {structure.face_count}", f"genus {structure.genus}"]
    for index, (name, color) in enumerate(zip(_face_names(structure), coloring.colors)):
        lines.append(f"face {index} {'black' if color == 0 else 'white'}: {name}")
    return '\n'.join(lines) + '\n'


def coloring_to_json(structure: FaceStructure, coloring: Coloring) -> Dict[str, Any]:
    return {
        'colorable': True,
        'genus': structure.genus,
        'faces': [
            {'ports': list(orbit), 'color': 'black' if color == 0 else 'white'}
            for orbit, color in zip(list(structure.faces) + [()] * structure.free_loop_faces, coloring.colors)
        ],
    }

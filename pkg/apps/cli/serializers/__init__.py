from .diagram_serializers import (
    arc_labels,
    coloring_to_json,
    diagram_to_json,
    medial_map_to_json,
    serialize_coloring,
    serialize_diagram,
    serialize_medial_map,
)
from .graph_serializers import graph_to_json, serialize_graph

__all__ = [
    'arc_labels',
    'coloring_to_json',
    'diagram_to_json',
    'graph_to_json',
    'medial_map_to_json',
    'serialize_coloring',
    'serialize_diagram',
    'serialize_graph',
    'serialize_medial_map',
]

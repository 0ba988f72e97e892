from .diagram_parser import DiagramFileParser, parse_diagram_file, parse_diagram_text
from .graph_parser import GraphFileParser, parse_graph_file, parse_graph_text

__all__ = [
    'DiagramFileParser',
    'GraphFileParser',
    'parse_diagram_file',
    'parse_diagram_text',
    'parse_graph_file',
    'parse_graph_text',
]

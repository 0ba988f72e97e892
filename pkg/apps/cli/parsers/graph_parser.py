"""
Rotation-system file parser

    v <vertex-id>: <dart> <dart> ...     counterclockwise, may be empty
    e <edge-id>: <dart> <dart> <+|->
"""

import logging
from pathlib import Path
from typing import Dict, Tuple, Union

from apps.core.exceptions import FormatError, InvariantViolation
from apps.cli.parsers.base import LineFileParser
from apps.cmap.models import NEGATIVE, POSITIVE, Edge, SignedCyclicGraph

logger = logging.getLogger(__name__)

SIGNS = {'+': POSITIVE, '-': NEGATIVE}


class GraphFileParser(LineFileParser):
    category = 'graph'

    def parse(self) -> SignedCyclicGraph:
        vertices: Dict[int, Tuple[int, Tuple[int, ...]]] = {}
        edges: Dict[int, Tuple[int, Edge]] = {}

        for line, tokens in self.lines():
            column, kind = tokens[0]
            if kind not in ('v', 'e'):
                raise FormatError(f"expected 'v' or 'e' but found '{kind}'", line, column)
            if len(tokens) < 2:
                raise FormatError('missing record id', line, column + len(kind))
            record = self.record_id(line, tokens[1])
            values = tokens[2:]

            if kind == 'v':
                if record in vertices:
                    raise InvariantViolation(
                        'vertex ids unique', f"vertex {record} on line {line} already defined on line {vertices[record][0]}"
                    )
                darts = tuple(self.integer(line, token, 'a dart id') for token in values)
                vertices[record] = (line, darts)
                continue

            if record in edges:
                raise InvariantViolation(
                    'edge ids unique', f"edge {record} on line {line} already defined on line {edges[record][0]}"
                )
            if len(values) != 3:
                at = values[3][0] if len(values) > 3 else (values[-1][0] if values else tokens[1][0])
                raise FormatError(f"edge needs two darts and a sign, got {len(values)} values", line, at)
            first = self.integer(line, values[0], 'a dart id')
            second = self.integer(line, values[1], 'a dart id')
            sign_column, sign_text = values[2]
            if sign_text not in SIGNS:
                raise FormatError(f"expected '+' or '-' but found '{sign_text}'", line, sign_column)
            try:
                edges[record] = (line, Edge(record, (first, second), SIGNS[sign_text]))
            except InvariantViolation as e:
                raise InvariantViolation(e.invariant, f"line {line}: {e.detail}")

        if not vertices:
            raise FormatError('graph has no vertices', 1, 1)

        graph = SignedCyclicGraph(
            vertices=tuple(darts for _, (_, darts) in sorted(vertices.items())),
            edges=tuple(edge for _, (_, edge) in sorted(edges.items())),
        )
        logger.debug(f"Parsed graph with {graph.vertex_count} vertices and {graph.edge_count} edges")
        return graph


def parse_graph_file(path: Union[str, Path]) -> SignedCyclicGraph:
    return GraphFileParser(file_path=path).parse()


def parse_graph_text(text: str) -> SignedCyclicGraph:
    return GraphFileParser(text=text).parse()

"""
Virtual diagram file parser

    x <crossing-id>: <a0> <a1> <a2> <a3>   arc labels in ccw port order,
                                            under-strand at positions 0 and 2
    o <count>                               free loops (optional, default 0)

Crossings are numbered by ascending id; every arc label must occur exactly
twice in the file.
"""

import logging
import re
from collections import defaultdict
from pathlib import Path
from typing import Dict, List, Tuple, Union

from apps.core.exceptions import FormatError, InvariantViolation
from apps.cli.parsers.base import LineFileParser
from apps.diagram.models import VirtualDiagram, port

logger = logging.getLogger(__name__)

LABEL = re.compile(r'^[A-Za-z0-9_]+$')


class DiagramFileParser(LineFileParser):
    category = 'diagram'

    def parse(self) -> VirtualDiagram:
        crossings: Dict[int, Tuple[int, List[str]]] = {}
        free_loops = None

        for line, tokens in self.lines():
            column, kind = tokens[0]
            if kind == 'o':
                if free_loops is not None:
                    raise FormatError("free loops given twice", line, column)
                if len(tokens) != 2:
                    raise FormatError("expected 'o <count>'", line, column)
                free_loops = self.integer(line, tokens[1], 'a loop count')
                continue
            if kind != 'x':
                raise FormatError(f"expected 'x' or 'o' but found '{kind}'", line, column)
            if len(tokens) < 2:
                raise FormatError('missing crossing id', line, column + 1)
            record = self.record_id(line, tokens[1])
            if record in crossings:
                raise InvariantViolation(
                    'crossing ids unique',
                    f"crossing {record} on line {line} already defined on line {crossings[record][0]}",
                )
            labels = tokens[2:]
            if len(labels) != 4:
                at = labels[4][0] if len(labels) > 4 else (labels[-1][0] if labels else tokens[1][0])
                raise FormatError(f"crossing needs 4 arc labels, got {len(labels)}", line, at)
            for label_column, label in labels:
                if not LABEL.match(label):
                    raise FormatError(f"bad arc label '{label}'", line, label_column)
            crossings[record] = (line, [label for _, label in labels])

        ends: Dict[str, List[int]] = defaultdict(list)
        for index, (_, (_, labels)) in enumerate(sorted(crossings.items())):
            for offset, label in enumerate(labels):
                ends[label].append(port(index, offset))

        arcs = []
        for label, ports in ends.items():
            if len(ports) != 2:
                raise InvariantViolation(
                    'each arc label appears exactly twice', f"label {label} appears {len(ports)} times"
                )
            arcs.append((ports[0], ports[1]))

        diagram = VirtualDiagram.from_arcs(len(crossings), arcs, free_loops or 0)
        if diagram.crossing_count == 0 and diagram.free_loops == 0:
            raise FormatError('diagram has no crossings and no free loops', 1, 1)
        logger.debug(f"Parsed diagram with {diagram.crossing_count} crossings and {diagram.free_loops} free loops")
        return diagram


def parse_diagram_file(path: Union[str, Path]) -> VirtualDiagram:
    return DiagramFileParser(file_path=path).parse()


def parse_diagram_text(text: str) -> VirtualDiagram:
    return DiagramFileParser(text=text).parse()

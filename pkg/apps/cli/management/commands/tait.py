"""
Tait graph of a checkerboard colorable diagram
"""

from apps.cli.base import KnotCommand
from apps.cli.serializers import graph_to_json, serialize_graph
from apps.core.exceptions import NotColorableError
from apps.diagram.services import checkerboard_colorable
from apps.medial.tait import tait_graph


class Command(KnotCommand):
    help = 'Extract the signed Tait graph of a diagram (exit 4 when not colorable)'
    input_arguments = ('diagram',)

    def add_command_arguments(self, parser):
        parser.add_argument('diagram', help='Diagram file (.vd)')
        parser.add_argument('--complement', action='store_true',
                            help='Use the complementary coloring (the dual Tait graph)')

    def run(self, config, **options):
        diagram = self.load_diagram(config.inputs[0])
        coloring = checkerboard_colorable(diagram)
        if coloring is None:
            raise NotColorableError(f"{config.inputs[0]} is not checkerboard colorable")
        if options['complement']:
            coloring = coloring.complement()

        graph = tait_graph(diagram, coloring)
        if config.json:
            self.emit_json(graph_to_json(graph))
        else:
            self.emit(serialize_graph(graph))

"""
Partial dual of a graph at one edge
"""

from apps.cli.base import KnotCommand
from apps.cli.serializers import graph_to_json, serialize_graph
from apps.cmap.services import partial_dual_edge


class Command(KnotCommand):
    help = 'Partial dual of a signed cyclic graph at one edge (the edge keeps its sign)'
    input_arguments = ('graph',)

    def add_command_arguments(self, parser):
        parser.add_argument('graph', help='Rotation-system file (.cg)')
        parser.add_argument('edge', type=int, help='Edge id')

    def run(self, config, **options):
        graph = partial_dual_edge(self.load_graph(config.inputs[0]), options['edge'])
        if config.json:
            self.emit_json(graph_to_json(graph))
        else:
            self.emit(serialize_graph(graph))

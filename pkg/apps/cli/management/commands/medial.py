"""
Medial diagram of a signed cyclic graph
"""

from apps.cli.base import KnotCommand
from apps.cli.serializers import (
    diagram_to_json,
    medial_map_to_json,
    serialize_diagram,
    serialize_medial_map,
)
from apps.medial.construction import medial


class Command(KnotCommand):
    help = 'Build the medial diagram of a graph file and print it with its edge/crossing map'
    input_arguments = ('graph',)

    def add_command_arguments(self, parser):
        parser.add_argument('graph', help='Rotation-system file (.cg)')

    def run(self, config, **options):
        diagram, mapping = medial(self.load_graph(config.inputs[0]))
        if config.json:
            self.emit_json({'diagram': diagram_to_json(diagram), 'map': medial_map_to_json(mapping)})
        else:
            self.emit(serialize_medial_map(mapping) + serialize_diagram(diagram))

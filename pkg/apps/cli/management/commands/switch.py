"""
Switch a crossing of a diagram
"""

from apps.cli.base import KnotCommand
from apps.cli.serializers import diagram_to_json, serialize_diagram
from apps.diagram.moves import switch_crossing


class Command(KnotCommand):
    help = 'Exchange over and under strands at one crossing'
    input_arguments = ('diagram',)

    def add_command_arguments(self, parser):
        parser.add_argument('diagram', help='Diagram file (.vd)')
        parser.add_argument('crossing', type=int, help='Crossing id')

    def run(self, config, **options):
        diagram = switch_crossing(self.load_diagram(config.inputs[0]), options['crossing'])
        if config.json:
            self.emit_json(diagram_to_json(diagram))
        else:
            self.emit(serialize_diagram(diagram))

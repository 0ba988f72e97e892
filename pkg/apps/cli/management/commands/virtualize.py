"""
Virtualize crossings of a diagram
"""

from apps.cli.base import KnotCommand
from apps.cli.serializers import diagram_to_json, serialize_diagram
from apps.diagram.moves import flank_crossing, unknotting_virtualization


class Command(KnotCommand):
    help = 'Virtualize one or more crossings (flank by virtual crossings and switch)'
    input_arguments = ('diagram',)

    def add_command_arguments(self, parser):
        parser.add_argument('diagram', help='Diagram file (.vd)')
        parser.add_argument('crossings', type=int, nargs='+', help='Crossing ids')
        parser.add_argument('--flank', action='store_true',
                            help='Apply the flank only, without the switch')

    def run(self, config, **options):
        diagram = self.load_diagram(config.inputs[0])
        if options['flank']:
            for crossing in sorted(set(options['crossings'])):
                diagram = flank_crossing(diagram, crossing)
        else:
            diagram = unknotting_virtualization(diagram, options['crossings'])

        if config.json:
            self.emit_json(diagram_to_json(diagram))
        else:
            self.emit(serialize_diagram(diagram))

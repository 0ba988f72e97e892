"""
Checkerboard coloring of a diagram's faces
"""

from apps.cli.base import KnotCommand
from apps.cli.serializers import coloring_to_json, serialize_coloring
from apps.diagram.services import checkerboard_colorable, faces


class Command(KnotCommand):
    help = 'Print a checkerboard coloring of the diagram faces, or "not colorable"'
    input_arguments = ('diagram',)

    def add_command_arguments(self, parser):
        parser.add_argument('diagram', help='Diagram file (.vd)')
        parser.add_argument('--complement', action='store_true',
                            help='Print the complementary coloring')

    def run(self, config, **options):
        diagram = self.load_diagram(config.inputs[0])
        structure = faces(diagram)
        coloring = checkerboard_colorable(diagram)

        if coloring is None:
            if config.json:
                self.emit_json({'colorable': False, 'genus': structure.genus})
            else:
                self.emit('not colorable')
            return

        if options['complement']:
            coloring = coloring.complement()
        if config.json:
            self.emit_json(coloring_to_json(structure, coloring))
        else:
            self.emit(serialize_coloring(structure, coloring))

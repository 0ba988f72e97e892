"""
Kauffman bracket of a diagram file
"""

from apps.cli.base import KnotCommand
from apps.invariants.services import bracket
from apps.polynomial.rendering import bracket_to_json, in_a_to_json, render_in_a
from apps.polynomial.services import specialize_bracket


class Command(KnotCommand):
    help = 'Compute the bracket <D>(A, B, d) of a diagram file'
    input_arguments = ('diagram',)

    def add_command_arguments(self, parser):
        parser.add_argument('diagram', help='Diagram file (.vd)')
        parser.add_argument('--normalized', action='store_true',
                            help='Print the specialization B = A^-1, d = -A^2 - A^-2')

    def run(self, config, **options):
        diagram = self.load_diagram(config.inputs[0])
        poly = bracket(diagram, jobs=config.jobs, limit=config.max_crossings)

        if options['normalized']:
            value = specialize_bracket(poly)
            if config.json:
                self.emit_json({'normalized': in_a_to_json(value)})
            else:
                self.emit(render_in_a(value))
        elif config.json:
            self.emit_json(bracket_to_json(poly))
        else:
            self.emit(str(poly))

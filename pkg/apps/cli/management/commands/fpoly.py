"""
F[G] of a signed cyclic graph by spanning-subgraph expansion
"""

from django.core.management.base import CommandError

from apps.cli.base import EXIT_USAGE, EXIT_VERIFICATION_FAILED, KnotCommand
from apps.cli.serializers import serialize_graph
from apps.invariants.services import f_expansion, f_recursive, worked_example
from apps.polynomial.rendering import bracket_to_json


class Command(KnotCommand):
    help = 'Compute F[G] for a graph file (expansion, optionally cross-checked by the recursion)'
    input_arguments = ('graph',)

    def add_command_arguments(self, parser):
        parser.add_argument('graph', nargs='?', help='Rotation-system file (.cg)')
        parser.add_argument('--recursive', action='store_true',
                            help='Cross-check against the deletion-marking recursion')
        parser.add_argument('--example', action='store_true',
                            help='Use the built-in worked example instead of a file')

    def run(self, config, **options):
        if options['example']:
            graph, _ = worked_example()
        elif config.inputs:
            graph = self.load_graph(config.inputs[0])
        else:
            raise CommandError('a graph file or --example is required', returncode=EXIT_USAGE)

        expanded = f_expansion(graph, limit=config.max_edges)
        recursed = f_recursive(graph, limit=config.max_edges) if options['recursive'] else None

        if config.json:
            data = {'fpoly': bracket_to_json(expanded)}
            if recursed is not None:
                data['recursive'] = bracket_to_json(recursed)
                data['agree'] = recursed == expanded
            self.emit_json(data)
        else:
            if options['example']:
                self.emit(serialize_graph(graph))
            self.emit(str(expanded))

        if recursed is not None and recursed != expanded:
            raise CommandError(f"recursion gives {recursed}", returncode=EXIT_VERIFICATION_FAILED)

"""
Random signed cyclic graph
"""

from django.core.management.base import CommandError

from apps.cli.base import EXIT_USAGE, KnotCommand
from apps.cli.serializers import graph_to_json, serialize_graph
from apps.cmap.generators import random_cyclic_graph


class Command(KnotCommand):
    help = 'Print a seeded random signed cyclic graph'

    def add_command_arguments(self, parser):
        parser.add_argument('--vertices', type=int, default=1, help='Number of vertices')
        parser.add_argument('--edges', type=int, default=2, help='Number of edges')
        parser.add_argument('--seed', type=int, default=None, help='RNG seed (default GRAPHLINKS_SEED)')
        parser.add_argument('--sign-bias', type=float, default=0.5,
                            help='Probability that an edge is positive')

    def run(self, config, **options):
        if options['vertices'] < 1 or options['edges'] < 0:
            raise CommandError('need at least one vertex and a non-negative edge count', returncode=EXIT_USAGE)
        if not 0.0 <= options['sign_bias'] <= 1.0:
            raise CommandError('--sign-bias must lie in [0, 1]', returncode=EXIT_USAGE)

        graph = random_cyclic_graph(
            vertex_count=options['vertices'],
            edge_count=options['edges'],
            sign_bias=options['sign_bias'],
            seed=config.seed,
        )
        if config.json:
            self.emit_json(graph_to_json(graph))
        else:
            self.emit(serialize_graph(graph))

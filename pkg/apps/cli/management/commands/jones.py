"""
Jones polynomial of a diagram file
"""

import time

from apps.cli.base import KnotCommand
from apps.diagram.services import orient, writhe
from apps.invariants.services import InvariantReport, bracket, tait_polynomial
from apps.polynomial.services import normalize_writhe


class Command(KnotCommand):
    help = 'Compute the normalized Jones polynomial of a diagram file'
    input_arguments = ('diagram',)

    def add_command_arguments(self, parser):
        parser.add_argument('diagram', help='Diagram file (.vd)')
        parser.add_argument('--reverse', type=int, nargs='+', default=(), metavar='COMPONENT',
                            help='Reverse these components (lowest-port orientation otherwise)')
        parser.add_argument('--via-f', action='store_true',
                            help='Compute from F of the Tait graph instead (colorable diagrams only)')
        parser.add_argument('--timing', action='store_true',
                            help='Include elapsed milliseconds in JSON output')

    def run(self, config, **options):
        diagram = self.load_diagram(config.inputs[0])
        reverse = options['reverse'] or ()

        started = time.perf_counter()
        if options['via_f']:
            diagram, poly = tait_polynomial(diagram, limit=config.max_edges)
        else:
            poly = bracket(diagram, jobs=config.jobs, limit=config.max_crossings)
        w = writhe(diagram, orient(diagram, reverse))
        report = InvariantReport(
            bracket=poly,
            jones=normalize_writhe(poly, w),
            writhe=w,
            state_count=1 << diagram.crossing_count,
            ms=(time.perf_counter() - started) * 1000,
        )

        if config.json:
            self.emit_json(report.to_json(timing=config.timing))
        else:
            self.emit(str(report.jones))

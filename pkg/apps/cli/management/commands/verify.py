"""
Run the verification suite

Exhaustive graphs up to --max-edges edges, --random seeded random graphs,
the shipped diagram fixtures and every abstract diagram up to
--max-crossings crossings. Exit code 3 when any property fails.
"""

import logging
from pathlib import Path

from django.conf import settings
from django.core.management.base import CommandError

from apps.cli.base import EXIT_VERIFICATION_FAILED, KnotCommand
from apps.cli.parsers import parse_diagram_file
from apps.invariants.verification import run_verification_suite

logger = logging.getLogger(__name__)


class Command(KnotCommand):
    help = 'Check the graph/diagram equalities over exhaustive and random families'

    @property
    def run_defaults(self):
        return {
            'max_edges': 4,
            'max_crossings': settings.GRAPHLINKS_VERIFY_MAX_CROSSINGS,
        }

    def add_command_arguments(self, parser):
        parser.add_argument('--seed', type=int, default=None, help='RNG seed (default GRAPHLINKS_SEED)')
        parser.add_argument('--random', type=int, default=None,
                            help='Number of random graphs (default GRAPHLINKS_RANDOM_CASES)')
        parser.add_argument('--r2', type=int, default=None,
                            help='Number of R2 clasps (default GRAPHLINKS_R2_CASES)')
        parser.add_argument('--no-fixtures', action='store_true',
                            help='Skip the diagram fixtures')

    def load_fixtures(self):
        fixtures_dir = Path(settings.FIXTURES_DIR)
        if not fixtures_dir.is_dir():
            logger.warning(f"Fixture directory {fixtures_dir} not found")
            return []
        return [parse_diagram_file(path) for path in sorted(fixtures_dir.glob('*.vd'))]

    def run(self, config, **options):
        diagrams = [] if options['no_fixtures'] else self.load_fixtures()
        r2_cases = options['r2']
        summary = run_verification_suite(
            max_edges=config.max_edges,
            seed=config.seed,
            random_count=config.random_count,
            jobs=config.jobs,
            random_max_edges=settings.GRAPHLINKS_RANDOM_MAX_EDGES,
            r2_cases=settings.GRAPHLINKS_R2_CASES if r2_cases is None else r2_cases,
            edge_orders=settings.GRAPHLINKS_EDGE_ORDERS,
            max_crossings=config.max_crossings,
            diagrams=diagrams,
        )

        if config.json:
            self.emit_json(summary.to_json())
        else:
            self.write_summary(summary)

        if not summary.passed:
            raise CommandError(
                f"{summary.total_failed} of {summary.total_checked} checks failed",
                returncode=EXIT_VERIFICATION_FAILED,
            )

    def write_summary(self, summary):
        self.emit(f"seed {summary.seed}, graphs up to {summary.max_edges} edges, "
                  f"{summary.random_count} random, diagrams up to {summary.max_crossings} crossings")
        for name, tally in summary.tallies.items():
            status = self.style.SUCCESS('ok') if tally.failed == 0 else self.style.ERROR('FAILED')
            self.emit(f"{name:<20} {tally.checked:>6} checked {tally.failed:>4} failed  {status}")
            for report in tally.failures:
                self.emit(f"    {report.subject}")
                for line in report.differences:
                    self.emit(f"        {line}")
        for subject in summary.expected_not_colorable:
            self.emit(f"not colorable: {subject}")
        self.emit(f"{summary.total_checked} checks, {summary.total_failed} failed")

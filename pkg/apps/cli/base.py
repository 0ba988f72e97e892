"""
Base class for the graph/diagram management commands

Exit codes:
    0 success
    1 usage error
    2 parse or invariant error
    3 verification failure
    4 diagram not checkerboard colorable where colorability is required
"""

import json
import logging
import sys
from typing import Any, Dict, Tuple

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError, CommandParser

from apps.core.exceptions import GraphLinksError, NotColorableError
from apps.cli.config import RunConfig, UsageError
from apps.cli.parsers import parse_diagram_file, parse_graph_file

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_VERIFICATION_FAILED = 3
EXIT_NOT_COLORABLE = 4


class UsageErrorParser(CommandParser):
    """argparse errors exit with the usage code instead of argparse's 2"""

    def error(self, message):
        if self.called_from_command_line:
            self.print_usage(sys.stderr)
            self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")
        raise CommandError(f"Error: {message}", returncode=EXIT_USAGE)


class KnotCommand(BaseCommand):
    """
    Subclasses implement add_command_arguments() and run(config, **options);
    library errors become CommandError with the matching exit code.
    """

    input_arguments: Tuple[str, ...] = ()
    run_defaults: Dict[str, Any] = {}

    def create_parser(self, prog_name, subcommand, **kwargs):
        parser = super().create_parser(prog_name, subcommand, **kwargs)
        parser.__class__ = UsageErrorParser
        return parser

    def add_arguments(self, parser):
        parser.add_argument('--format', choices=('text', 'json'), default='text',
                            help='Output format')
        parser.add_argument('--jobs', type=int, default=None,
                            help='Worker processes for state sums (default GRAPHLINKS_JOBS)')
        parser.add_argument('--max-edges', type=int, default=None,
                            help='Largest graph to enumerate (default GRAPHLINKS_MAX_EDGES)')
        parser.add_argument('--max-crossings', type=int, default=None,
                            help='Largest diagram to enumerate (default GRAPHLINKS_MAX_CROSSINGS)')
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser):
        pass

    def execute(self, *args, **options):
        if settings.PLAIN_OUTPUT:
            options['no_color'] = True
        return super().execute(*args, **options)

    def handle(self, *args, **options):
        try:
            inputs = [options[name] for name in self.input_arguments if options.get(name)]
            config = RunConfig.from_options(self.command_name(), options, inputs, self.run_defaults)
        except UsageError as e:
            raise CommandError(str(e), returncode=EXIT_USAGE)

        try:
            self.run(config, **options)
        except NotColorableError as e:
            raise CommandError(str(e), returncode=EXIT_NOT_COLORABLE)
        except GraphLinksError as e:
            logger.error(f"{config.command}: {e}")
            raise CommandError(str(e), returncode=EXIT_INVALID)

    def run(self, config: RunConfig, **options):
        raise NotImplementedError('subclasses of KnotCommand must provide a run() method')

    def command_name(self) -> str:
        return self.__class__.__module__.rsplit('.', 1)[-1]

    # ------------------------------------------------------------------
    # Helpers
    # ------------------------------------------------------------------

    def load_graph(self, path):
        return parse_graph_file(path)

    def load_diagram(self, path):
        return parse_diagram_file(path)

    def emit(self, text: str):
        """Result text on stdout, never styled"""
        self.stdout.write(text)

    def emit_json(self, data: Dict[str, Any]):
        self.stdout.write(json.dumps(data))

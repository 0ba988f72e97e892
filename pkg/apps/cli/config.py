"""
Run configuration for management commands

Options left unset on the command line fall back to the GRAPHLINKS_*
settings (which python-decouple reads from the environment).
"""

from dataclasses import dataclass
from typing import Any, Dict, Optional, Sequence, Tuple

from django.conf import settings

OUTPUT_FORMATS = ('text', 'json')


class UsageError(ValueError):
    """Options are well-formed for the parser but not acceptable"""
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    inputs: Tuple[str, ...] = ()
    output_format: str = 'text'
    seed: int = 0
    max_edges: int = 16
    max_crossings: int = 20
    jobs: int = 1
    random_count: int = 200
    timing: bool = False

    def __post_init__(self):
        if self.output_format not in OUTPUT_FORMATS:
            raise UsageError(f"unknown format '{self.output_format}', expected one of {', '.join(OUTPUT_FORMATS)}")
        if self.max_edges < 1 or self.max_crossings < 1:
            raise UsageError('limits must be positive')
        if self.jobs < 1:
            raise UsageError('--jobs must be at least 1')
        if self.random_count < 0:
            raise UsageError('--random must not be negative')

    @property
    def json(self) -> bool:
        return self.output_format == 'json'

    @classmethod
    def from_options(cls, command: str, options: Dict[str, Any], inputs: Sequence[str] = (),
                     defaults: Optional[Dict[str, Any]] = None) -> 'RunConfig':
        fallback = {
            'seed': settings.GRAPHLINKS_SEED,
            'max_edges': settings.GRAPHLINKS_MAX_EDGES,
            'max_crossings': settings.GRAPHLINKS_MAX_CROSSINGS,
            'jobs': settings.GRAPHLINKS_JOBS,
            'random_count': settings.GRAPHLINKS_RANDOM_CASES,
        }
        fallback.update(defaults or {})

        def pick(name: str, option: Optional[str] = None):
            value = options.get(option or name)
            return fallback[name] if value is None else value

        return cls(
            command=command,
            inputs=tuple(str(path) for path in inputs),
            output_format=options.get('format') or 'text',
            seed=pick('seed'),
            max_edges=pick('max_edges'),
            max_crossings=pick('max_crossings'),
            jobs=pick('jobs'),
            random_count=pick('random_count', 'random'),
            timing=bool(options.get('timing')),
        )

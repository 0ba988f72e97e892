"""
Shared pytest fixtures: access to the shipped graph and diagram files
"""

from pathlib import Path

import pytest
from django.conf import settings

from apps.cli.parsers import parse_diagram_file, parse_graph_file


@pytest.fixture
def fixture_path():
    def resolve(name: str) -> str:
        return str(Path(settings.FIXTURES_DIR) / name)
    return resolve


@pytest.fixture
def load_diagram(fixture_path):
    return lambda name: parse_diagram_file(fixture_path(name))


@pytest.fixture
def load_graph(fixture_path):
    return lambda name: parse_graph_file(fixture_path(name))

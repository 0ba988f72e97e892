import json
from io import StringIO

import pytest
from django.core.management import call_command
from django.core.management.base import CommandError

from apps.cli.parsers import parse_diagram_text, parse_graph_text


def run(*args, **options):
    out = StringIO()
    call_command(*args, stdout=out, **options)
    return out.getvalue()


def returncode(*args, **options):
    with pytest.raises(CommandError) as excinfo:
        run(*args, **options)
    return excinfo.value.returncode


class TestFpoly:
    def test_worked_example(self):
        assert run('fpoly', example=True) == (
            'v 0: 0 1 2 3\ne 0: 0 2 +\ne 1: 1 3 -\n'
            'B^2*d + 2*A*B + A^2*d\n'
        )

    def test_recursion_agrees(self, fixture_path):
        data = json.loads(run('fpoly', str(fixture_path('triangle.cg')), recursive=True, format='json'))
        assert data['agree'] is True
        assert data['fpoly'] == data['recursive']

    def test_needs_an_input(self):
        assert returncode('fpoly') == 1

    def test_limit(self, fixture_path):
        assert returncode('fpoly', str(fixture_path('triangle.cg')), max_edges=2) == 2


class TestDiagramCommands:
    @pytest.mark.parametrize('name, expected', [
        ('trefoil.vd', '-t^-4 + t^-3 + t^-1\n'),
        ('trefoil_right.vd', 't + t^3 - t^4\n'),
        ('hopf.vd', '-t^(-5/2) - t^(-1/2)\n'),
        ('virtualized_trefoil.vd', '1\n'),
    ])
    def test_jones(self, fixture_path, name, expected):
        assert run('jones', str(fixture_path(name))) == expected

    def test_jones_reverse(self, fixture_path):
        assert run('jones', str(fixture_path('hopf.vd')), reverse=[1]) == '-t^(1/2) - t^(5/2)\n'

    def test_jones_via_f(self, fixture_path):
        assert run('jones', str(fixture_path('trefoil_right.vd')), via_f=True) == 't + t^3 - t^4\n'

    def test_jones_via_f_reverse(self, fixture_path):
        out = run('jones', str(fixture_path('hopf.vd')), via_f=True, reverse=[1])
        assert out == '-t^(1/2) - t^(5/2)\n'

    def test_jones_via_f_json(self, fixture_path):
        path = str(fixture_path('trefoil.vd'))
        data = json.loads(run('jones', path, via_f=True, format='json'))
        assert data == json.loads(run('jones', path, format='json'))
        assert data['writhe'] == -3

    def test_jones_via_f_needs_coloring(self, fixture_path):
        assert returncode('jones', str(fixture_path('virtual_trefoil.vd')), via_f=True) == 4

    def test_jones_json(self, fixture_path):
        data = json.loads(run('jones', str(fixture_path('trefoil.vd')), format='json'))
        assert data['writhe'] == -3
        assert 'ms' not in data
        timed = json.loads(run('jones', str(fixture_path('trefoil.vd')), format='json', timing=True))
        assert timed['ms'] >= 0

    def test_bracket(self, fixture_path):
        assert run('bracket', str(fixture_path('hopf.vd'))) == 'B^2*d + 2*A*B + A^2*d\n'
        assert run('bracket', str(fixture_path('kink_positive.vd')), normalized=True) == '-A^3\n'

    def test_bracket_normalized_json_counts_powers_of_a(self, fixture_path):
        data = json.loads(run('bracket', str(fixture_path('kink_positive.vd')), normalized=True, format='json'))
        assert data == {'normalized': {'terms': [{'A': 3, 'c': -1}]}}

    def test_checkerboard(self, fixture_path):
        out = run('checkerboard', str(fixture_path('trefoil_right.vd')))
        assert out.startswith('faces 5\ngenus 0\nface 0 black:')
        complement = run('checkerboard', str(fixture_path('trefoil_right.vd')), complement=True)
        assert complement.startswith('faces 5\ngenus 0\nface 0 white:')

    def test_checkerboard_not_colorable(self, fixture_path):
        assert run('checkerboard', str(fixture_path('virtual_trefoil.vd'))) == 'not colorable\n'
        data = json.loads(run('checkerboard', str(fixture_path('virtual_trefoil.vd')), format='json'))
        assert data == {'colorable': False, 'genus': 1}

    def test_tait(self, fixture_path):
        assert run('tait', str(fixture_path('trefoil_right.vd'))) == (
            'v 0: 0 1\nv 1: 2 3\nv 2: 4 5\ne 0: 0 2 +\ne 1: 1 4 +\ne 2: 3 5 +\n'
        )

    def test_tait_not_colorable(self, fixture_path):
        assert returncode('tait', str(fixture_path('virtual_trefoil.vd'))) == 4

    def test_virtualize(self, fixture_path, load_diagram):
        out = run('virtualize', str(fixture_path('trefoil.vd')), '0')
        assert parse_diagram_text(out) == load_diagram('virtualized_trefoil.vd')

    def test_switch(self, fixture_path, load_diagram):
        out = run('switch', str(fixture_path('kink_positive.vd')), '0')
        assert parse_diagram_text(out) == load_diagram('kink_negative.vd')

    def test_unknown_crossing(self, fixture_path):
        assert returncode('switch', str(fixture_path('kink_positive.vd')), '3') == 2


class TestGraphCommands:
    def test_medial(self, fixture_path, load_diagram):
        out = run('medial', str(fixture_path('triangle.cg')))
        assert out.startswith('# crossing 0: edge 0, vertex-parallel B, edge-parallel A\n')
        assert parse_diagram_text(out) == load_diagram('trefoil_right.vd')

    def test_pdual(self, fixture_path):
        assert run('pdual', str(fixture_path('double_loop.cg')), '0') == (
            'v 0: 0 1\nv 1: 2 3\ne 0: 0 3 +\ne 1: 1 2 +\n'
        )

    def test_gen_is_seeded(self):
        first = run('gen', vertices=2, edges=5, seed=7)
        assert first == run('gen', vertices=2, edges=5, seed=7)
        graph = parse_graph_text(first)
        assert (graph.vertex_count, graph.edge_count) == (2, 5)

    def test_gen_all_negative(self):
        graph = parse_graph_text(run('gen', edges=3, sign_bias=0.0))
        assert all(edge.sign == -1 for edge in graph.edges)

    @pytest.mark.parametrize('options', [{'vertices': 0}, {'sign_bias': 1.5}])
    def test_gen_usage(self, options):
        assert returncode('gen', **options) == 1


class TestUsageAndInputErrors:
    def test_unknown_format(self, fixture_path):
        assert returncode('jones', str(fixture_path('trefoil.vd')), format='xml') == 1

    def test_no_workers(self, fixture_path):
        assert returncode('bracket', str(fixture_path('trefoil.vd')), jobs=0) == 1

    def test_missing_file(self):
        assert returncode('jones', 'no/such/file.vd') == 2

    def test_parse_error(self, tmp_path):
        bad = tmp_path / 'bad.cg'
        bad.write_text('v 0: 0 1\ne 0: 0 1 x\n')
        with pytest.raises(CommandError, match="line 2, column 10: expected '\\+' or '-' but found 'x'"):
            run('fpoly', str(bad))


class TestVerify:
    def test_small_run_passes(self):
        out = run('verify', max_edges=2, random=3, r2=3, max_crossings=1)
        assert out.splitlines()[-1].endswith('checks, 0 failed')

    def test_json_summary(self):
        data = json.loads(run('verify', max_edges=1, random=0, r2=0, max_crossings=1,
                              no_fixtures=True, format='json'))
        assert data['passed'] is True

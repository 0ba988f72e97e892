import pytest

from apps.core import security
from apps.core.exceptions import FileValidationError
from apps.core.security import validate_input_file


def test_valid_graph_file(tmp_path):
    path = tmp_path / 'loop.cg'
    path.write_text('v 0: 0 1\ne 0: 0 1 +\n')
    result = validate_input_file(path, 'graph')
    assert result['valid'] is True
    assert result['extension'] == '.cg'
    assert result['text'].startswith('v 0')


def test_txt_is_accepted_for_both_formats(tmp_path):
    path = tmp_path / 'any.txt'
    path.write_text('o 1\n')
    assert validate_input_file(path, 'diagram')['category'] == 'diagram'
    assert validate_input_file(path, 'graph')['category'] == 'graph'


def test_wrong_extension(tmp_path):
    path = tmp_path / 'knot.vd'
    path.write_text('o 1\n')
    with pytest.raises(FileValidationError, match='not allowed for graph files'):
        validate_input_file(path, 'graph')


def test_missing_file(tmp_path):
    with pytest.raises(FileValidationError, match='File not found'):
        validate_input_file(tmp_path / 'nothing.cg')
    with pytest.raises(FileValidationError):
        validate_input_file(None)


def test_non_ascii_content(tmp_path):
    path = tmp_path / 'bad.cg'
    path.write_bytes('v 0: 0 1\ne 0: 0 1 −\n'.encode('utf-8'))
    with pytest.raises(FileValidationError, match='line 2'):
        validate_input_file(path)


def test_oversized_file(tmp_path, monkeypatch):
    monkeypatch.setitem(security.MAX_FILE_SIZES, 'graph', 4)
    path = tmp_path / 'big.cg'
    path.write_text('v 0: 0 1\n')
    with pytest.raises(FileValidationError, match='exceeds'):
        validate_input_file(path)

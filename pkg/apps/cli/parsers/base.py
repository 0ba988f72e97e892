"""
Shared line tokenizer for the two text formats

Both formats are line based: `<kind> <id>: <values...>` records, `#` starts
a comment, blank lines are ignored. Columns are 1-based.
"""

import re
from pathlib import Path
from typing import Iterator, List, Tuple, Union

from apps.core.exceptions import FormatError
from apps.core.security import validate_input_file

TOKEN = re.compile(r'\S+')

Token = Tuple[int, str]


class LineFileParser:
    """Base class: validates the file, then feeds tokenized lines to parse_line()"""

    category = 'default'

    def __init__(self, file_path: Union[str, Path, None] = None, text: str = None):
        self.file_path = file_path
        self.text = text

    def read(self) -> str:
        if self.text is None:
            self.text = validate_input_file(self.file_path, self.category)['text']
        return self.text

    def lines(self) -> Iterator[Tuple[int, List[Token]]]:
        for number, raw in enumerate(self.read().splitlines(), start=1):
            content = raw.split('#', 1)[0]
            tokens = [(m.start() + 1, m.group()) for m in TOKEN.finditer(content)]
            if tokens:
                yield number, tokens

    @staticmethod
    def record_id(line: int, token: Token) -> int:
        """`<digits>:` as a record id"""
        column, text = token
        if not text.endswith(':') or not text[:-1].isdigit():
            raise FormatError(f"expected '<id>:' but found '{text}'", line, column)
        return int(text[:-1])

    @staticmethod
    def integer(line: int, token: Token, what: str) -> int:
        column, text = token
        if not text.isdigit():
            raise FormatError(f"expected {what} but found '{text}'", line, column)
        return int(text)

    def parse(self):
        raise NotImplementedError("Each file parser must implement parse() method")

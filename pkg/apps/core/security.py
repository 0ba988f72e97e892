"""
Input file validation for graph and diagram files
- Extension checks per file category
- Size limits
- ASCII-only content
"""

import logging
import os
from pathlib import Path
from typing import Any, Dict, Union

from apps.core.exceptions import FileValidationError

logger = logging.getLogger(__name__)


# Allowed file types for the two text formats
ALLOWED_FILE_TYPES = {
    'graph': {
        'extensions': ['.cg', '.txt'],
    },
    'diagram': {
        'extensions': ['.vd', '.txt'],
    },
}

# Maximum file sizes (in bytes)
MAX_FILE_SIZES = {
    'graph': 1024 * 1024,       # 1 MB
    'diagram': 1024 * 1024,     # 1 MB
    'default': 1024 * 1024,
}


def validate_input_file(path: Union[str, Path], category: str = 'graph') -> Dict[str, Any]:
    """
    Validate an input file before parsing

    Args:
        path: location of the file on disk
        category: 'graph' or 'diagram'

    Returns:
        dict with validation results

    Raises:
        FileValidationError if validation fails
    """
    if path is None:
        raise FileValidationError("No file provided")

    path = Path(path)
    if not path.is_file():
        raise FileValidationError(f"File not found: {path}")

    file_ext = path.suffix.lower()

    # 1. Check extension against allowed list
    allowed = ALLOWED_FILE_TYPES.get(category)
    if allowed and file_ext not in allowed['extensions']:
        raise FileValidationError(
            f"File extension '{file_ext}' not allowed for {category} files. "
            f"Allowed types: {', '.join(allowed['extensions'])}"
        )

    # 2. Check file size
    size = path.stat().st_size
    max_size = MAX_FILE_SIZES.get(category, MAX_FILE_SIZES['default'])
    if size > max_size:
        max_kb = max_size / 1024
        raise FileValidationError(f"File size exceeds maximum allowed ({max_kb:.0f} KB)")

    # 3. Content must be ASCII
    raw = path.read_bytes()
    try:
        text = raw.decode('ascii')
    except UnicodeDecodeError as e:
        line = raw[:e.start].count(b'\n') + 1
        raise FileValidationError(f"Non-ASCII byte on line {line} of {path.name}")

    logger.debug(f"Validated {category} file {path} ({size} bytes)")

    return {
        'valid': True,
        'filename': os.path.basename(str(path)),
        'extension': file_ext,
        'size': size,
        'category': category,
        'text': text,
    }

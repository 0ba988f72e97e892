"""
Local development settings
- Debug logging from the library apps
- Single worker process unless GRAPHLINKS_JOBS says otherwise
"""
from .base import *

DEBUG = True

LOGGING['loggers']['apps']['level'] = config('LOG_LEVEL', default='DEBUG')

"""
Test settings
- Quiet logging, deterministic defaults regardless of the caller's environment
"""
from .base import *

GRAPHLINKS_JOBS = 1
GRAPHLINKS_SEED = 0
GRAPHLINKS_RANDOM_CASES = 20
GRAPHLINKS_R2_CASES = 10
PLAIN_OUTPUT = True

LOGGING['loggers']['apps']['level'] = 'WARNING'
GRAPHLINKS_VERIFY_MAX_CROSSINGS = 2
GRAPHLINKS_RANDOM_MAX_EDGES = 6

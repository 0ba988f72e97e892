import os
from pathlib import Path

from decouple import config

BASE_DIR = Path(__file__).resolve().parent.parent.parent

# No web surface and no database: the project only runs management commands,
# so the key is a placeholder unless overridden
SECRET_KEY = config('SECRET_KEY', default='graphlinks-offline-only')

DEBUG = config('DEBUG', default=False, cast=bool)

ALLOWED_HOSTS = []

INSTALLED_APPS = [
    'apps.core',
    'apps.cmap',
    'apps.polynomial',
    'apps.diagram',
    'apps.medial',
    'apps.invariants',
    'apps.cli',
]

DATABASES = {}

USE_I18N = False
USE_TZ = True
TIME_ZONE = 'UTC'

FIXTURES_DIR = BASE_DIR / 'fixtures'

# ============================================
# ENUMERATION LIMITS
# ============================================
# State sums are exhaustive (2^n terms), these keep desk-scale runs desk-scale
GRAPHLINKS_MAX_EDGES = config('GRAPHLINKS_MAX_EDGES', default=16, cast=int)
GRAPHLINKS_MAX_CROSSINGS = config('GRAPHLINKS_MAX_CROSSINGS', default=20, cast=int)

# Worker processes for state enumeration (1 = in-process)
GRAPHLINKS_JOBS = config('GRAPHLINKS_JOBS', default=1, cast=int)

# ============================================
# VERIFICATION SUITE
# ============================================
GRAPHLINKS_SEED = config('GRAPHLINKS_SEED', default=0, cast=int)
GRAPHLINKS_RANDOM_CASES = config('GRAPHLINKS_RANDOM_CASES', default=200, cast=int)
GRAPHLINKS_RANDOM_MAX_EDGES = config('GRAPHLINKS_RANDOM_MAX_EDGES', default=8, cast=int)
GRAPHLINKS_R2_CASES = config('GRAPHLINKS_R2_CASES', default=50, cast=int)
GRAPHLINKS_EDGE_ORDERS = config('GRAPHLINKS_EDGE_ORDERS', default=5, cast=int)
GRAPHLINKS_VERIFY_MAX_CROSSINGS = config('GRAPHLINKS_VERIFY_MAX_CROSSINGS', default=3, cast=int)

# ============================================
# OUTPUT
# ============================================
# Any value of NO_COLOR switches styling off (https://no-color.org)
PLAIN_OUTPUT = 'NO_COLOR' in os.environ

LOG_LEVEL = config('LOG_LEVEL', default='INFO')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {module} {message}',
            'style': '{',
        },
    },
    'handlers': {
        # stderr only: stdout carries command results
        'console': {
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'verbose',
        },
    },
    'root': {
        'handlers': ['console'],
        'level': 'WARNING',
    },
    'loggers': {
        'apps': {
            'handlers': ['console'],
            'level': LOG_LEVEL,
            'propagate': False,
        },
    },
}

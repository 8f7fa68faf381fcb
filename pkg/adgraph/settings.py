"""
Django settings for the adgraph project.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/stable/ref/settings/
"""

# Build paths inside the project like this: os.path.join(BASE_DIR, ...)
import os

SITE_ROOT = os.path.dirname(os.path.abspath(__file__))

BASE_DIR = os.path.dirname(SITE_ROOT)

# Nothing here is served, but Django still wants a key.
# Set this in local_settings.py if you ever expose the project
SECRET_KEY = os.getenv('ADG_SECRET_KEY') or 'adgraph-local-only'

DEBUG = False

ALLOWED_HOSTS = []

# Application definition

INSTALLED_APPS = (
    'adgraph.automata',
    'adgraph.games',
    'adgraph.testcases',
    'adgraph.splitting',
    'adgraph.extraction',
    'adgraph.generators',
    'adgraph.core',
)

# No models, no database
DATABASES = {}

USE_TZ = True

TIME_ZONE = 'UTC'

# Where the shipped .sa/.ccs fixtures live
ADG_FIXTURES_DIR = os.getenv('ADG_FIXTURES_DIR') or os.path.join(BASE_DIR, 'fixtures')

# Observation enumeration cap (obs, leaf sizes, --obs-cap default)
ADG_OBS_CAP = int(os.getenv('ADG_OBS_CAP') or 100000)

# Exhaustive ADG search limits
ADG_ORACLE_MAX_STATES = int(os.getenv('ADG_ORACLE_MAX_STATES') or 8)
ADG_ORACLE_DEPTH = int(os.getenv('ADG_ORACLE_DEPTH') or 64)

# See http://docs.djangoproject.com/en/stable/topics/logging for
# more details on how to customize your logging configuration.
from django.utils.log import DEFAULT_LOGGING as LOGGING

LOGGING["handlers"]["console"]["filters"] = None
LOGGING["handlers"]["console"]["level"] = "DEBUG"
LOGGING["loggers"] = {
    'django': {
        'handlers': ['console'],
        'level': os.getenv('ADG_LOG_LEVEL', 'WARNING'),
    },
    'adgraph': {
        'handlers': ['console'],
        'level': os.getenv('ADG_LOG_LEVEL', 'WARNING'),
        'propagate': False,
    },
}

try:
    from local_settings import *
except ImportError:
    pass

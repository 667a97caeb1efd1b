"""
Django settings for the quandle_toolkit project.

The project hosts no web surface: Django provides the management-command
runner (the ``manage.py`` binary), the test runner and the logging setup.
"""

import os

# SECURITY WARNING: nothing here is signed, but Django still insists on a key.
SECRET_KEY = os.getenv('DJANGO_SECRET_KEY', 'django-insecure-quandle-toolkit-development-key')

DEBUG = os.getenv('DJANGO_DEBUG', '0') == '1'

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'quandles.apps.QuandlesConfig',
]

MIDDLEWARE = []


# Internationalization

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False


# Logging
# stdout carries command reports only; diagnostics go to stderr as JSON lines.

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'json': {
            '()': 'pythonjsonlogger.json.JsonFormatter',
            'fmt': '%(asctime)s %(levelname)s %(name)s %(message)s',
        },
    },
    'handlers': {
        'stderr': {
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'json',
        },
    },
    'loggers': {
        'quandles': {
            'handlers': ['stderr'],
            'level': os.getenv('QUANDLE_LOG_LEVEL', 'WARNING'),
            'propagate': False,
        },
    },
}
